#include "pcm/synth.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pcm {

namespace {

Eigen::Matrix3d rotation_from_rng(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  return q.toRotationMatrix();
}

}  // namespace

Eigen::Matrix3d random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return rotation_from_rng(rng);
}

std::pair<CorrespondenceSet, RigidTransform> generate_instance(
    const SynthConfig& cfg) {
  if (cfg.n_inliers + cfg.n_outliers < 1) {
    throw std::invalid_argument("instance needs at least one correspondence");
  }
  if (cfg.noise_sigma < 0.0 || cfg.cube_half_extent <= 0.0) {
    throw std::invalid_argument("invalid noise sigma or cube extent");
  }
  if (cfg.epsilon <= 0.0) {
    throw std::invalid_argument("epsilon must be positive");
  }

  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_real_distribution<double> cube(-cfg.cube_half_extent,
                                              cfg.cube_half_extent);
  std::normal_distribution<double> gauss(0.0, 1.0);

  RigidTransform gt;
  if (cfg.transform) {
    gt = *cfg.transform;
    if (!is_rotation(gt.rotation)) {
      throw std::invalid_argument("supplied transform is not rigid");
    }
  } else {
    // The pairwise distance ||(x_i - x_j) - (y_i - y_j)|| is translation
    // invariant but not rotation invariant: a rotation by theta moves a
    // pair by up to 2 sin(theta/2) * diameter. Sample a uniform rotation
    // axis but clamp the angle so the rotation contributes at most
    // epsilon/4 to any pair, leaving room for noise; otherwise the inlier
    // clique would be unrealizable for any noise draw.
    const Eigen::AngleAxisd full(rotation_from_rng(rng));
    const double diameter = 2.0 * std::sqrt(3.0) * cfg.cube_half_extent;
    const double max_angle = 2.0 * std::asin(cfg.epsilon / (8.0 * diameter));
    gt.rotation =
        Eigen::AngleAxisd(std::min(full.angle(), max_angle), full.axis())
            .toRotationMatrix();
    std::uniform_real_distribution<double> half_cube(
        -cfg.cube_half_extent / 2.0, cfg.cube_half_extent / 2.0);
    gt.translation =
        Eigen::Vector3d(half_cube(rng), half_cube(rng), half_cube(rng));
  }

  auto cube_point = [&]() {
    return Eigen::Vector3d(cube(rng), cube(rng), cube(rng));
  };

  std::vector<Eigen::Vector3d> inlier_x(cfg.n_inliers);
  for (auto& p : inlier_x) p = cube_point();

  // Re-draw the noise until the inlier clique holds; the generated set is
  // only usable when the ground-truth inliers are pairwise consistent.
  std::vector<Eigen::Vector3d> noise(cfg.n_inliers);
  bool clique_ok = false;
  for (int attempt = 0; attempt < 100 && !clique_ok; ++attempt) {
    for (auto& v : noise) {
      v = cfg.noise_sigma *
          Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
    }
    clique_ok = true;
    for (std::size_t i = 0; i < cfg.n_inliers && clique_ok; ++i) {
      for (std::size_t j = i + 1; j < cfg.n_inliers; ++j) {
        Correspondence a{inlier_x[i], gt.apply(inlier_x[i]) + noise[i], {}, {}};
        Correspondence b{inlier_x[j], gt.apply(inlier_x[j]) + noise[j], {}, {}};
        if (pair_distance(a, b) > cfg.epsilon) {
          clique_ok = false;
          break;
        }
      }
    }
  }
  if (!clique_ok) {
    throw std::runtime_error(
        "could not realize the inlier clique in 100 noise draws; "
        "noise_sigma is too large for epsilon");
  }

  CorrespondenceSet set;
  set.epsilon = cfg.epsilon;
  set.items.reserve(cfg.n_inliers + cfg.n_outliers);
  for (std::size_t i = 0; i < cfg.n_inliers; ++i) {
    Correspondence c;
    c.x = inlier_x[i];
    c.y = gt.apply(inlier_x[i]) + noise[i];
    c.gt_inlier = true;
    set.items.push_back(c);
  }
  for (std::size_t i = 0; i < cfg.n_outliers; ++i) {
    Correspondence c;
    c.x = cube_point();
    c.y = cube_point();
    c.gt_inlier = false;
    set.items.push_back(c);
  }
  std::shuffle(set.items.begin(), set.items.end(), rng);
  return {std::move(set), gt};
}

}  // namespace pcm
