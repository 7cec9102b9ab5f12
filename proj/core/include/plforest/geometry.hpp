#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "plforest/errors.hpp"

namespace plforest {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Added to covariances before inversion and inside log-determinants, guarding
// rank-deficient leaf modes. Units are m^2.
inline constexpr double kCovarianceEpsilon = 1e-6;

// Rigid camera-to-world transform, world = R * x + t.
class RigidTransform {
 public:
  RigidTransform() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}
  RigidTransform(const Mat3& rotation, const Vec3& translation)
      : rotation_(rotation), translation_(translation) {}

  static RigidTransform identity() { return RigidTransform(); }

  // Builds from a homogeneous 4x4 matrix. The rotation block is projected
  // onto SO(3); throws PoseValidationError when its determinant is farther
  // than det_tolerance from +1.
  static RigidTransform from_matrix(const Mat4& m, double det_tolerance = 1e-3);

  const Mat3& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }

  Mat4 matrix() const;
  RigidTransform inverse() const;

  RigidTransform operator*(const RigidTransform& rhs) const {
    return RigidTransform(rotation_ * rhs.rotation_,
                          rotation_ * rhs.translation_ + translation_);
  }
  Vec3 operator*(const Vec3& x) const { return rotation_ * x + translation_; }

 private:
  Mat3 rotation_;
  Vec3 translation_;
};

struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 0;
  int height = 0;

  bool contains(double u, double v) const {
    return u >= 0.0 && v >= 0.0 && u < width && v < height;
  }
  // Throws ConfigError when focal lengths or the principal point are invalid.
  void validate() const;
};

// 3D Gaussian (mean, covariance); the frame (world or camera) is contextual.
struct Gaussian3 {
  Vec3 mean = Vec3::Zero();
  Mat3 cov = Mat3::Identity();
};

// Camera-frame point of pixel p at depth d: ((px-cx)d/fx, (py-cy)d/fy, d).
// Throws InvalidDepthError for non-positive or non-finite depth and
// BoundsError for pixels outside the image.
Vec3 back_project(const Vec2& pixel, double depth, const CameraIntrinsics& K);

// Pinhole projection, the inverse of back_project for points with z > 0.
Vec2 project(const Vec3& x, const CameraIntrinsics& K);

inline Vec3 transform_point(const RigidTransform& H, const Vec3& x) {
  return H * x;
}

// R * cov * R^T.
Mat3 rotate_covariance(const Mat3& rotation, const Mat3& cov);

// Squared Mahalanobis distance (x-mean)^T (cov + eps I)^-1 (x-mean).
// Throws DegenerateError when the regularized covariance is not positive
// definite.
double mahalanobis_sq(const Vec3& x, const Gaussian3& g);

// Least-squares rigid alignment of paired points: returns H minimizing
// sum ||H * first_i - second_i||^2 with det(R) = +1. Needs at least three
// non-collinear pairs; throws DegenerateError otherwise.
RigidTransform kabsch_align(const std::vector<std::pair<Vec3, Vec3>>& pairs);

struct PoseDelta {
  double translation_m = 0.0;
  double rotation_deg = 0.0;
};

// Translation error ||t_e - t_g|| and relative rotation angle
// acos((trace(Rg^T Re) - 1) / 2) in degrees, clamped into [0, 180].
PoseDelta pose_delta(const RigidTransform& estimate,
                     const RigidTransform& ground_truth);

}  // namespace plforest
