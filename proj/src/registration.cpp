#include "pcm/registration.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "pcm/correspondence.hpp"

namespace pcm {

bool is_rotation(const Eigen::Matrix3d& r, double tol) {
  const Eigen::Matrix3d err =
      r.transpose() * r - Eigen::Matrix3d::Identity();
  return err.cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

RigidTransform estimate_rigid(const std::vector<Correspondence>& subset) {
  if (subset.size() < 3) {
    throw std::invalid_argument(
        "estimate_rigid requires at least 3 correspondences");
  }
  Eigen::Vector3d x_mean = Eigen::Vector3d::Zero();
  Eigen::Vector3d y_mean = Eigen::Vector3d::Zero();
  for (const auto& c : subset) {
    x_mean += c.x;
    y_mean += c.y;
  }
  x_mean /= static_cast<double>(subset.size());
  y_mean /= static_cast<double>(subset.size());

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& c : subset) {
    cov += (c.x - x_mean) * (c.y - y_mean).transpose();
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sigma = svd.singularValues();
  // A rotation is only determined when the points span a plane: the second
  // singular value must be meaningfully nonzero.
  if (sigma(1) <= 1e-9 * sigma(0) || sigma(0) == 0.0) {
    throw DegeneracyError("degenerate (collinear) point configuration");
  }
  const Eigen::Matrix3d u = svd.matrixU();
  const Eigen::Matrix3d v = svd.matrixV();
  Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
  d(2, 2) = (v * u.transpose()).determinant() < 0.0 ? -1.0 : 1.0;

  RigidTransform t;
  t.rotation = v * d * u.transpose();
  t.translation = y_mean - t.rotation * x_mean;
  return t;
}

double angular_error(const Eigen::Matrix3d& r_est,
                     const Eigen::Matrix3d& r_gt) {
  if (!is_rotation(r_est) || !is_rotation(r_gt)) {
    throw std::invalid_argument("angular_error requires proper rotations");
  }
  // atan2 of the skew (sin) and trace (cos) parts; unlike acos of the
  // trace alone this keeps full precision for angles near 0 and pi
  const Eigen::Matrix3d d = r_est * r_gt.transpose();
  const Eigen::Vector3d axis(d(2, 1) - d(1, 2), d(0, 2) - d(2, 0),
                             d(1, 0) - d(0, 1));
  const double s = axis.norm() / 2.0;
  const double c = (d.trace() - 1.0) / 2.0;
  return std::atan2(s, c) * 180.0 / M_PI;
}

double translation_error(const Eigen::Vector3d& t_est,
                         const Eigen::Vector3d& t_gt) {
  return (t_est - t_gt).norm();
}

std::string write_transform_text(const RigidTransform& t) {
  std::ostringstream out;
  out.precision(17);
  for (int r = 0; r < 3; ++r) {
    out << t.rotation(r, 0) << " " << t.rotation(r, 1) << " "
        << t.rotation(r, 2) << " " << t.translation(r) << "\n";
  }
  out << "0 0 0 1\n";
  return out.str();
}

RigidTransform parse_transform_text(const std::string& text) {
  std::istringstream in(text);
  double m[16];
  for (double& value : m) {
    if (!(in >> value)) {
      throw std::invalid_argument("transform text must hold 16 numbers");
    }
  }
  RigidTransform t;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t.rotation(r, c) = m[r * 4 + c];
    t.translation(r) = m[r * 4 + 3];
  }
  if (!is_rotation(t.rotation)) {
    throw std::invalid_argument("transform rotation block is not a rotation");
  }
  return t;
}

}  // namespace pcm
