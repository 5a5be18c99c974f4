#pragma once

#include <cstdint>
#include <vector>

#include "pcm/correspondence.hpp"
#include "pcm/registration.hpp"

namespace pcm {

struct RansacConfig {
  double confidence = 0.99;        // stopping criterion
  double inlier_threshold = 0.0;   // <= 0: use the set's epsilon
  std::uint64_t max_iterations = 10'000'000;
  std::uint64_t rng_seed = 0;
};

struct RansacResult {
  std::vector<int> inliers;  // consensus under `transform`, ascending
  RigidTransform transform;
  std::uint64_t iterations = 0;
  double wall_time = 0.0;
  bool found = false;  // false if every sample was degenerate
};

/// Classic 3-point RANSAC over correspondences: sample, estimate, count
/// residuals ||T(x_i) - y_i|| <= threshold, keep the largest consensus.
/// Stops at the adaptive bound log(1-confidence)/log(1-w^3) with w the best
/// inlier fraction so far, or at the iteration cap. The final transform is
/// re-estimated on the best consensus set and the reported inliers are the
/// recount under that transform.
RansacResult ransac_register(const CorrespondenceSet& c,
                             const RansacConfig& cfg);

}  // namespace pcm
