#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "pcm/graph.hpp"
#include "pcm/registration.hpp"

namespace pcm {

/// A tentative pairing of a point in cloud X with a point in cloud Y.
struct Correspondence {
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
  Eigen::Vector3d y = Eigen::Vector3d::Zero();
  std::optional<double> score;      // descriptor distance, used for ranking
  std::optional<bool> gt_inlier;    // synthetic data only
};

struct CorrespondenceSet {
  std::vector<Correspondence> items;
  double epsilon = 0.0;  // <= 0 means unset

  std::size_t size() const { return items.size(); }
  bool has_epsilon() const { return epsilon > 0.0; }
};

/// || (x_i - x_j) - (y_i - y_j) ||_2. Symmetric, zero on identical pairs,
/// invariant under a common rigid motion of the x side onto the y side.
double pair_distance(const Correspondence& a, const Correspondence& b);

/// n = N; edge (i,j) iff pair_distance <= epsilon (inclusive) and i != j.
/// Throws std::invalid_argument when epsilon is unset.
Graph build_consistency_graph(const CorrespondenceSet& c);

/// Exact complement of the consistency graph (pair_distance > epsilon).
Graph build_inconsistency_graph(const CorrespondenceSet& c);

/// Twice the mean nearest-neighbour distance, each point within its own
/// cloud. Both clouds need at least 2 points.
double default_epsilon(const std::vector<Eigen::Vector3d>& x_cloud,
                       const std::vector<Eigen::Vector3d>& y_cloud);

/// Fraction of correspondences with ||T_gt(x) - y|| > epsilon / 2.
double outlier_ratio(const CorrespondenceSet& c, const RigidTransform& t_gt);

/// Keeps the n correspondences with the smallest score, ascending.
/// Items without a score sort last.
CorrespondenceSet best_by_score(const CorrespondenceSet& c, std::size_t n);

// Text formats: correspondences are "x1 x2 x3 y1 y2 y3 [score]" per line,
// point clouds "x y z" per line; '#' starts a comment.
CorrespondenceSet parse_correspondences(const std::string& text);
std::string write_correspondences(const CorrespondenceSet& c);
std::vector<Eigen::Vector3d> parse_point_cloud(const std::string& text);

CorrespondenceSet load_correspondence_file(const std::string& path);
std::vector<Eigen::Vector3d> load_point_cloud_file(const std::string& path);

/// Centers each cloud side and applies one uniform scale so both sides fit
/// in [-half_extent, half_extent]^3.
void normalize_to_cube(std::vector<Eigen::Vector3d>& x_cloud,
                       std::vector<Eigen::Vector3d>& y_cloud,
                       double half_extent = 50.0);

}  // namespace pcm
