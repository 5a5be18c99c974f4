#include <Eigen/Geometry>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pcm/correspondence.hpp"
#include "pcm/registration.hpp"
#include "pcm/synth.hpp"

using namespace pcm;

namespace {

std::vector<Correspondence> make_pairs(const std::vector<Eigen::Vector3d>& pts,
                                       const RigidTransform& t) {
  std::vector<Correspondence> out;
  for (const auto& p : pts) {
    Correspondence c;
    c.x = p;
    c.y = t.apply(p);
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("is_rotation") {
  CHECK(is_rotation(Eigen::Matrix3d::Identity()));
  CHECK(is_rotation(random_rotation(3)));
  Eigen::Matrix3d reflect = Eigen::Matrix3d::Identity();
  reflect(2, 2) = -1.0;  // det -1
  CHECK_FALSE(is_rotation(reflect));
  CHECK_FALSE(is_rotation(2.0 * Eigen::Matrix3d::Identity()));
}

TEST_CASE("exact recovery on noise-free points") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-25.0, 25.0);
  for (int trial = 0; trial < 30; ++trial) {
    RigidTransform gt;
    gt.rotation = random_rotation(1000 + static_cast<std::uint64_t>(trial));
    gt.translation = {u(rng), u(rng), u(rng)};

    std::vector<Eigen::Vector3d> pts;
    const std::size_t n = 3 + rng() % 10;
    for (std::size_t k = 0; k < n; ++k) pts.push_back({u(rng), u(rng), u(rng)});

    const RigidTransform est = estimate_rigid(make_pairs(pts, gt));
    CHECK(is_rotation(est.rotation));
    CHECK(angular_error(est.rotation, gt.rotation) < 1e-9);
    CHECK(translation_error(est.translation, gt.translation) < 1e-9);
  }
}

TEST_CASE("reflection correction picks a proper rotation") {
  // a mostly-planar spread tempts the SVD toward a reflection; the
  // determinant fix must keep the estimate a proper rotation
  RigidTransform gt;
  gt.rotation = random_rotation(55);
  gt.translation = {3, -1, 2};
  const std::vector<Eigen::Vector3d> pts = {
      {0, 0, 0}, {10, 0, 0}, {0, 10, 0}, {10, 10, 0}, {5, 5, 0.01}};
  const RigidTransform est = estimate_rigid(make_pairs(pts, gt));
  CHECK(est.rotation.determinant() == doctest::Approx(1.0));
  CHECK(angular_error(est.rotation, gt.rotation) < 1e-6);
}

TEST_CASE("degenerate inputs throw") {
  RigidTransform id;
  CHECK_THROWS_AS(estimate_rigid(make_pairs({{0, 0, 0}, {1, 1, 1}}, id)),
                  std::invalid_argument);  // too few
  // collinear
  CHECK_THROWS_AS(
      estimate_rigid(make_pairs({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, id)),
      DegeneracyError);
  // coincident
  CHECK_THROWS_AS(
      estimate_rigid(make_pairs({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}, id)),
      DegeneracyError);
}

TEST_CASE("least squares beats the truth under noise") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> noise(0.0, 0.1);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  RigidTransform gt;
  gt.rotation = random_rotation(9);
  gt.translation = {4, 4, 4};

  std::vector<Correspondence> pairs;
  for (int k = 0; k < 50; ++k) {
    Correspondence c;
    c.x = {u(rng), u(rng), u(rng)};
    c.y = gt.apply(c.x) + Eigen::Vector3d(noise(rng), noise(rng), noise(rng));
    pairs.push_back(c);
  }
  const RigidTransform est = estimate_rigid(pairs);

  auto sse = [&](const RigidTransform& t) {
    double s = 0.0;
    for (const auto& c : pairs) s += (t.apply(c.x) - c.y).squaredNorm();
    return s;
  };
  CHECK(sse(est) <= sse(gt) + 1e-12);
  CHECK(angular_error(est.rotation, gt.rotation) < 1.0);
}

TEST_CASE("angular error properties") {
  const Eigen::Matrix3d r = random_rotation(4);
  CHECK(angular_error(r, r) == doctest::Approx(0.0));

  // 90-degree z rotation against identity
  Eigen::Matrix3d rz;
  rz = Eigen::AngleAxisd(M_PI / 2.0, Eigen::Vector3d::UnitZ());
  CHECK(angular_error(rz, Eigen::Matrix3d::Identity()) ==
        doctest::Approx(90.0));
  CHECK(angular_error(rz, Eigen::Matrix3d::Identity()) ==
        angular_error(Eigen::Matrix3d::Identity(), rz));

  CHECK_THROWS_AS(angular_error(2.0 * r, r), std::invalid_argument);
}

TEST_CASE("transform inverse and text round trip") {
  RigidTransform t;
  t.rotation = random_rotation(66);
  t.translation = {0.5, -3.25, 7.0};

  const RigidTransform inv = t.inverse();
  const Eigen::Vector3d p(1, 2, 3);
  CHECK((inv.apply(t.apply(p)) - p).norm() < 1e-12);

  const RigidTransform back = parse_transform_text(write_transform_text(t));
  CHECK((back.rotation - t.rotation).norm() < 1e-15);
  CHECK((back.translation - t.translation).norm() < 1e-15);
}
