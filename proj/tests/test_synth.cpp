#include <random>

#include "doctest.h"
#include "pcm/correspondence.hpp"
#include "pcm/registration.hpp"
#include "pcm/solvers.hpp"
#include "pcm/synth.hpp"

using namespace pcm;

TEST_CASE("random rotations are proper and seed-deterministic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Eigen::Matrix3d r = random_rotation(seed);
    CHECK(is_rotation(r));
    CHECK((random_rotation(seed) - r).norm() == 0.0);
  }
  CHECK((random_rotation(1) - random_rotation(2)).norm() > 1e-6);
}

TEST_CASE("generated instance structure") {
  SynthConfig cfg;
  cfg.n_inliers = 20;
  cfg.n_outliers = 80;
  cfg.noise_sigma = 0.5;
  cfg.epsilon = 6.0;
  cfg.rng_seed = 12345;
  const auto [set, gt] = generate_instance(cfg);

  CHECK(set.size() == 100);
  CHECK(set.epsilon == 6.0);
  CHECK(is_rotation(gt.rotation));
  CHECK(gt.translation.cwiseAbs().maxCoeff() <= cfg.cube_half_extent / 2.0);

  std::size_t inliers = 0;
  for (const auto& c : set.items) {
    REQUIRE(c.gt_inlier.has_value());
    CHECK(c.x.cwiseAbs().maxCoeff() <= cfg.cube_half_extent);
    if (*c.gt_inlier) {
      ++inliers;
      // y = T(x) + gaussian noise; sigma 0.5 makes 6 an ample bound
      CHECK((c.y - gt.apply(c.x)).norm() < 6.0);
    }
  }
  CHECK(inliers == 20);

  // same seed, same instance; different seed, different instance
  const auto [again, gt2] = generate_instance(cfg);
  CHECK((gt2.rotation - gt.rotation).norm() == 0.0);
  CHECK(again.items[0].x == set.items[0].x);
  cfg.rng_seed = 54321;
  const auto [other, gt3] = generate_instance(cfg);
  CHECK((gt3.rotation - gt.rotation).norm() > 1e-9);
}

TEST_CASE("inliers form a clique in the consistency graph") {
  SynthConfig cfg;
  cfg.n_inliers = 15;
  cfg.n_outliers = 45;
  cfg.noise_sigma = 0.75;
  cfg.epsilon = 6.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.rng_seed = seed;
    const auto [set, gt] = generate_instance(cfg);
    const Graph g = build_consistency_graph(set);
    std::vector<int> inlier_ids;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set.items[i].gt_inlier.value()) inlier_ids.push_back(static_cast<int>(i));
    }
    REQUIRE(inlier_ids.size() == 15);
    for (std::size_t a = 0; a < inlier_ids.size(); ++a) {
      for (std::size_t b = a + 1; b < inlier_ids.size(); ++b) {
        CHECK(g.has_edge(inlier_ids[a], inlier_ids[b]));
      }
    }
    // the exact solver therefore finds at least the inlier clique
    CHECK(solve_mcq(g).size >= 15);
  }
}

TEST_CASE("fixed ground-truth transform is honoured") {
  // translation only: the pairwise measure is not rotation invariant, so a
  // large fixed rotation would make the inlier clique unrealizable
  RigidTransform gt;
  gt.translation = {1, 2, 3};
  SynthConfig cfg;
  cfg.n_inliers = 5;
  cfg.n_outliers = 0;
  cfg.noise_sigma = 0.0;
  cfg.epsilon = 1.0;
  cfg.transform = gt;
  const auto [set, used] = generate_instance(cfg);
  CHECK((used.rotation - gt.rotation).norm() == 0.0);
  for (const auto& c : set.items) {
    CHECK((c.y - gt.apply(c.x)).norm() < 1e-12);  // sigma 0: exact
  }
}

TEST_CASE("impossible noise level is rejected") {
  SynthConfig cfg;
  cfg.n_inliers = 30;
  cfg.n_outliers = 0;
  cfg.noise_sigma = 20.0;  // noise dwarfs the threshold
  cfg.epsilon = 0.01;
  cfg.rng_seed = 1;
  CHECK_THROWS_AS(generate_instance(cfg), std::runtime_error);
}

TEST_CASE("outlier ratio roughly matches the mix") {
  SynthConfig cfg;
  cfg.n_inliers = 50;
  cfg.n_outliers = 150;
  cfg.noise_sigma = 0.25;
  cfg.epsilon = 4.0;
  cfg.rng_seed = 9;
  const auto [set, gt] = generate_instance(cfg);
  const double ratio = outlier_ratio(set, gt);
  // nominally 0.75; uniform outliers rarely land within eps/2 of T(x)
  CHECK(ratio > 0.70);
  CHECK(ratio <= 0.80);
}
