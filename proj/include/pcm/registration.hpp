#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcm {

struct Correspondence;

/// Degenerate point configuration (collinear / coincident sample).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Proper rotation plus translation. apply(p) = R * p + t.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }
  RigidTransform inverse() const {
    RigidTransform inv;
    inv.rotation = rotation.transpose();
    inv.translation = -(inv.rotation * translation);
    return inv;
  }
};

/// RtR = I within tol and det = +1.
bool is_rotation(const Eigen::Matrix3d& r, double tol = 1e-6);

/// Least-squares rigid transform mapping the x side onto the y side:
/// center both sides, SVD of the 3x3 cross-covariance, reflection-corrected
/// rotation, translation from the centroids. Needs >= 3 correspondences;
/// throws DegeneracyError when the x points are (near-)collinear.
RigidTransform estimate_rigid(const std::vector<Correspondence>& subset);

/// Geodesic angle of r_est * r_gt^T in degrees, range [0, 180].
/// Throws std::invalid_argument on non-rotation input.
double angular_error(const Eigen::Matrix3d& r_est, const Eigen::Matrix3d& r_gt);

/// || t_est - t_gt ||_2.
double translation_error(const Eigen::Vector3d& t_est,
                         const Eigen::Vector3d& t_gt);

/// Homogeneous 4x4 matrix, one row per line.
std::string write_transform_text(const RigidTransform& t);
RigidTransform parse_transform_text(const std::string& text);

}  // namespace pcm
