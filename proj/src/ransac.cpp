#include "pcm/ransac.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

namespace pcm {

namespace {

std::vector<int> count_inliers(const CorrespondenceSet& c,
                               const RigidTransform& t, double threshold) {
  std::vector<int> inliers;
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    if ((t.apply(c.items[i].x) - c.items[i].y).norm() <= threshold) {
      inliers.push_back(static_cast<int>(i));
    }
  }
  return inliers;
}

std::uint64_t adaptive_bound(double confidence, double w) {
  if (w <= 0.0) return std::numeric_limits<std::uint64_t>::max();
  const double denom = std::log1p(-w * w * w);
  if (denom == 0.0 || w >= 1.0) return 1;
  const double k = std::log(1.0 - confidence) / denom;
  if (k >= 1e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(std::max(k, 1.0)));
}

}  // namespace

RansacResult ransac_register(const CorrespondenceSet& c,
                             const RansacConfig& cfg) {
  if (c.size() < 3) {
    throw std::invalid_argument("ransac_register requires N >= 3");
  }
  if (cfg.confidence <= 0.0 || cfg.confidence >= 1.0) {
    throw std::invalid_argument("confidence must be in (0, 1)");
  }
  double threshold = cfg.inlier_threshold;
  if (threshold <= 0.0) threshold = c.epsilon;
  if (threshold <= 0.0) {
    throw std::invalid_argument("no inlier threshold and epsilon unset");
  }

  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);

  RansacResult result;
  std::vector<int> best;
  RigidTransform best_t;
  std::uint64_t needed = std::numeric_limits<std::uint64_t>::max();
  // Degenerate (collinear) samples are resampled without counting toward
  // the adaptive bound, but still bounded to avoid spinning forever on
  // pathological inputs.
  std::uint64_t degenerate = 0;
  const std::uint64_t degenerate_cap = 100 * cfg.max_iterations;

  std::vector<Correspondence> sample(3);
  while (result.iterations < needed &&
         result.iterations < cfg.max_iterations) {
    std::size_t a = pick(rng), b = pick(rng), d = pick(rng);
    if (a == b || a == d || b == d) {
      if (++degenerate >= degenerate_cap) break;
      continue;
    }
    sample[0] = c.items[a];
    sample[1] = c.items[b];
    sample[2] = c.items[d];
    RigidTransform t;
    try {
      t = estimate_rigid(sample);
    } catch (const DegeneracyError&) {
      if (++degenerate >= degenerate_cap) break;
      continue;
    }
    ++result.iterations;
    std::vector<int> inliers = count_inliers(c, t, threshold);
    if (inliers.size() > best.size()) {
      best = std::move(inliers);
      best_t = t;
      result.found = true;
      const double w =
          static_cast<double>(best.size()) / static_cast<double>(c.size());
      needed = adaptive_bound(cfg.confidence, w);
    }
  }

  if (result.found) {
    if (best.size() >= 3) {
      std::vector<Correspondence> consensus;
      consensus.reserve(best.size());
      for (int i : best) consensus.push_back(c.items[static_cast<std::size_t>(i)]);
      try {
        best_t = estimate_rigid(consensus);
      } catch (const DegeneracyError&) {
        // keep the sample transform
      }
    }
    result.transform = best_t;
    result.inliers = count_inliers(c, best_t, threshold);
  }
  result.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return result;
}

}  // namespace pcm
