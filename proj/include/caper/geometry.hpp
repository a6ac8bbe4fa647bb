#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace caper {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Points = std::vector<Vec3>;

/// Rigid motion x -> R x + t.
struct RigidTransform {
  Mat3 R = Mat3::Identity();
  Vec3 t = Vec3::Zero();

  static RigidTransform identity() { return {}; }

  Vec3 apply(const Vec3& x) const { return R * x + t; }
  RigidTransform inverse() const { return {R.transpose(), -(R.transpose() * t)}; }
  /// (*this) after `rhs`: x -> this(rhs(x)).
  RigidTransform operator*(const RigidTransform& rhs) const { return {R * rhs.R, R * rhs.t + t}; }
};

/// Similarity x -> s R x + t. Maps a part's rest coordinates into the camera frame.
struct Similarity {
  Mat3 R = Mat3::Identity();
  Vec3 t = Vec3::Zero();
  double s = 1.0;

  Vec3 apply(const Vec3& x) const { return s * (R * x) + t; }
};

/// Box with center, orthonormal axes (columns of `rotation`) and half extents along them.
struct OrientedBox {
  Vec3 center = Vec3::Zero();
  Mat3 rotation = Mat3::Identity();
  Vec3 half_extents = Vec3::Constant(0.5);

  double volume() const { return 8.0 * half_extents.prod(); }
  bool contains(const Vec3& p) const;
  std::array<Vec3, 8> corners() const;
};

/// Pixel-space box (u1, v1, u2, v2).
struct Box2d {
  double u1 = 0, v1 = 0, u2 = 0, v2 = 0;

  double area() const { return (u2 > u1 && v2 > v1) ? (u2 - u1) * (v2 - v1) : 0.0; }
  bool valid() const { return u1 < u2 && v1 < v2; }
};

double iou2d(const Box2d& a, const Box2d& b);

/// Rotation by `angle` radians about unit `axis`.
Mat3 axis_angle(const Vec3& axis, double angle);
Mat3 rot_z(double angle);

/// Orthonormality and det = +1 within `tol`.
bool is_rotation(const Mat3& R, double tol = 1e-9);

/// Some unit vector orthogonal to `v` (deterministic).
Vec3 any_perpendicular(const Vec3& v);

/// Camera pose (world -> camera) for a camera at `eye` looking at `target`, +y pointing image-down.
RigidTransform look_at(const Vec3& eye, const Vec3& target, const Vec3& up);

/// Tight axis-aligned box of `points` in the given frame (identity rotation).
OrientedBox aabb_of(const Points& points);

double distance_point_to_line(const Vec3& p, const Vec3& line_point, const Vec3& line_dir);

}  // namespace caper
