#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pcm/correspondence.hpp"
#include "pcm/registration.hpp"

namespace pcm {

struct SynthConfig {
  std::size_t n_inliers = 0;
  std::size_t n_outliers = 0;
  double noise_sigma = 0.0;
  double cube_half_extent = 50.0;
  /// Threshold stored on the generated set; the inlier-clique guarantee is
  /// enforced against it.
  double epsilon = 0.0;
  /// Ground-truth transform; nullopt samples one: uniform rotation axis
  /// with the angle clamped so the rotation perturbs pair distances by at
  /// most epsilon/4 (the pairwise distance is not rotation invariant),
  /// translation uniform in half the cube extent.
  std::optional<RigidTransform> transform;
  std::uint64_t rng_seed = 0;
};

/// Synthetic instance with known ground truth: inliers are (x, T(x)+noise),
/// outliers pair independent uniform points in the cube. Items are
/// shuffled deterministically by seed and carry gt_inlier labels. Noise is
/// re-drawn (up to 100 attempts) until every inlier pair distance is within
/// epsilon, so the inliers always form a clique in the consistency graph.
std::pair<CorrespondenceSet, RigidTransform> generate_instance(
    const SynthConfig& cfg);

/// Uniform random rotation (quaternion method).
Eigen::Matrix3d random_rotation(std::uint64_t seed);

}  // namespace pcm
