#include "plforest/geometry.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace plforest {

namespace {

// Nearest rotation in Frobenius norm via SVD, reflection corrected.
Mat3 project_to_so3(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    Mat3 flip = Mat3::Identity();
    flip(2, 2) = -1.0;
    r = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return r;
}

}  // namespace

RigidTransform RigidTransform::from_matrix(const Mat4& m,
                                           double det_tolerance) {
  const Mat3 block = m.topLeftCorner<3, 3>();
  if (std::abs(block.determinant() - 1.0) > det_tolerance) {
    throw PoseValidationError("rotation block determinant " +
                              std::to_string(block.determinant()) +
                              " is not +1");
  }
  return RigidTransform(project_to_so3(block), m.topRightCorner<3, 1>());
}

Mat4 RigidTransform::matrix() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation_;
  m.topRightCorner<3, 1>() = translation_;
  return m;
}

RigidTransform RigidTransform::inverse() const {
  Mat3 rt = rotation_.transpose();
  return RigidTransform(rt, -(rt * translation_));
}

void CameraIntrinsics::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0)) {
    throw ConfigError("focal lengths must be positive");
  }
  if (!(cx > 0.0 && cx < width) || !(cy > 0.0 && cy < height)) {
    throw ConfigError("principal point must lie inside the image");
  }
}

Vec3 back_project(const Vec2& pixel, double depth,
                  const CameraIntrinsics& K) {
  if (!std::isfinite(depth) || depth <= 0.0) {
    throw InvalidDepthError("depth must be positive and finite");
  }
  if (!K.contains(pixel.x(), pixel.y())) {
    throw BoundsError("pixel outside image bounds");
  }
  return Vec3((pixel.x() - K.cx) * depth / K.fx,
              (pixel.y() - K.cy) * depth / K.fy, depth);
}

Vec2 project(const Vec3& x, const CameraIntrinsics& K) {
  if (!(x.z() > 0.0)) {
    throw InvalidDepthError("point is behind the camera");
  }
  return Vec2(K.fx * x.x() / x.z() + K.cx, K.fy * x.y() / x.z() + K.cy);
}

Mat3 rotate_covariance(const Mat3& rotation, const Mat3& cov) {
  Mat3 out = rotation * cov * rotation.transpose();
  return 0.5 * (out + out.transpose());
}

double mahalanobis_sq(const Vec3& x, const Gaussian3& g) {
  Mat3 cov = g.cov + kCovarianceEpsilon * Mat3::Identity();
  Eigen::LLT<Mat3> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw DegenerateError("covariance is singular after regularization");
  }
  const Vec3 r = x - g.mean;
  return r.dot(llt.solve(r));
}

RigidTransform kabsch_align(const std::vector<std::pair<Vec3, Vec3>>& pairs) {
  if (pairs.size() < 3) {
    throw DegenerateError("alignment needs at least 3 point pairs");
  }
  Vec3 centroid_a = Vec3::Zero();
  Vec3 centroid_b = Vec3::Zero();
  for (const auto& [a, b] : pairs) {
    centroid_a += a;
    centroid_b += b;
  }
  const double n = static_cast<double>(pairs.size());
  centroid_a /= n;
  centroid_b /= n;

  Mat3 cross = Mat3::Zero();
  double spread = 0.0;
  for (const auto& [a, b] : pairs) {
    cross += (a - centroid_a) * (b - centroid_b).transpose();
    spread += (a - centroid_a).squaredNorm();
  }

  Eigen::JacobiSVD<Mat3> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 sigma = svd.singularValues();
  // Collinear or coincident input leaves at most one informative singular
  // value and the in-plane rotation unconstrained.
  if (sigma(1) <= 1e-12 * std::max(sigma(0), 1e-300) || spread <= 0.0) {
    throw DegenerateError("point configuration is collinear or degenerate");
  }

  Mat3 d = Mat3::Identity();
  if ((svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0) {
    d(2, 2) = -1.0;
  }
  const Mat3 rotation = svd.matrixV() * d * svd.matrixU().transpose();
  return RigidTransform(rotation, centroid_b - rotation * centroid_a);
}

PoseDelta pose_delta(const RigidTransform& estimate,
                     const RigidTransform& ground_truth) {
  PoseDelta delta;
  delta.translation_m =
      (estimate.translation() - ground_truth.translation()).norm();
  const double trace =
      (ground_truth.rotation().transpose() * estimate.rotation()).trace();
  const double arg = std::clamp(0.5 * (trace - 1.0), -1.0, 1.0);
  delta.rotation_deg = std::acos(arg) * 180.0 / std::numbers::pi;
  return delta;
}

}  // namespace plforest
