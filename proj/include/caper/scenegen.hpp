#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caper/geometry.hpp"
#include "caper/kinematics.hpp"

namespace caper {

/// Plane {x : normal . x = offset}, normal facing the viewpoint.
struct PlaneModel {
  Vec3 normal = Vec3::UnitZ();
  double offset = 0.0;
  std::size_t inlier_count = 0;

  double signed_distance(const Vec3& x) const { return normal.dot(x) - offset; }
  /// In-plane orthonormal axes (e1, e2) with e1 x e2 = normal.
  std::pair<Vec3, Vec3> basis() const;
  Vec3 origin() const { return offset * normal; }
};

struct PlaneRansacConfig {
  int iterations = 200;
  double inlier_tol = 0.005;
  std::uint64_t seed = 0;
};

/// Pinhole camera. `pose` maps world coordinates into the camera frame (z forward).
struct CameraModel {
  double fx = 600.0, fy = 600.0;
  double cx = 320.0, cy = 240.0;
  int width = 640, height = 480;
  RigidTransform pose;

  void validate() const;
  /// Pixel coordinates of a camera-frame point with positive depth.
  Eigen::Vector2d project(const Vec3& p_cam) const { return {fx * p_cam.x() / p_cam.z() + cx, fy * p_cam.y() / p_cam.z() + cy}; }
  Vec3 center_world() const { return pose.inverse().t; }
};

/// Joint parameters of one part (the joint attaching it to its parent) in the camera frame.
/// The root part carries a virtual fixed joint located at its box center.
struct JointParams {
  JointType type = JointType::Fixed;
  Vec3 axis = Vec3::UnitZ();
  Vec3 location = Vec3::Zero();
};

struct SceneInstance {
  std::string model_ref;
  std::string category;
  RigidTransform base_pose;  // object -> world
  double scale = 1.0;
  std::vector<double> joint_states;
  Box2d bbox2d;
  std::vector<Similarity> part_poses_cam;  // per part (index - 1), rest coords -> camera
  std::vector<JointParams> joint_params_cam;  // per part (index - 1)
};

/// Per-point annotated point cloud of one instance, camera frame.
struct Observation {
  std::string instance_ref;
  int num_parts = 0;
  Points points_cam;
  Points colors;
  std::vector<int> gt_labels;
  Points gt_nocs;
  Points gt_joint_loc;
  Points gt_joint_axis;
  std::vector<JointType> gt_joint_type;
  Box2d bbox2d;

  std::size_t size() const { return points_cam.size(); }
  void check_lengths() const;
};

/// Upright random placement onto a plane.
struct PlacementConfig {
  int count = 3;
  double scale_min = 0.8;
  double scale_max = 1.2;
  int max_rejections = 1000;
  /// Region polygon in plane coordinates (along PlaneModel::basis()), counter-clockwise.
  std::vector<Eigen::Vector2d> region = {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
};

/// RANSAC plane fit with a least-squares refit over the best hypothesis' inliers. The normal
/// is oriented toward `viewpoint`.
PlaneModel fit_plane_ransac(const Points& points, const PlaneRansacConfig& cfg, const Vec3& viewpoint);

/// Separating-axis test over the 15 candidate axes. Touching boxes do not intersect.
bool obb_intersects(const OrientedBox& a, const OrientedBox& b);

/// Object-frame bounding box of the posed, scaled model.
OrientedBox posed_object_box(const ArticulatedModel& model, const std::vector<double>& joint_states,
                             double scale);

/// Randomly places `cfg.count` instances drawn from `models` onto `plane`. Each instance rests
/// on the plane at its lowest point, stays inside the region and misses every other instance.
std::vector<SceneInstance> place_instances(const std::vector<const ArticulatedModel*>& models,
                                           const std::vector<std::string>& model_refs,
                                           const PlaneModel& plane, const PlacementConfig& cfg,
                                           std::uint64_t seed);

/// World-frame OBB of an instance.
OrientedBox instance_world_box(const SceneInstance& instance, const ArticulatedModel& model);

/// Lowest signed distance of the posed model above `plane`.
double min_height_above(const SceneInstance& instance, const ArticulatedModel& model, const PlaneModel& plane);

/// Fills part_poses_cam, joint_params_cam and bbox2d for a placed instance.
void annotate_instance(SceneInstance& instance, const ArticulatedModel& model, const CameraModel& camera);

/// Samples `n_points` foreground points proportionally to part point counts, plus
/// `n_background` points from `background` (label 0) when given.
Observation sample_observation(const SceneInstance& instance, const ArticulatedModel& model,
                               const CameraModel& camera, int n_points, std::uint64_t seed,
                               const Points* background_world = nullptr, int n_background = 0);

/// Synthetic tabletop: points of a plane patch plus uniform clutter, in world coordinates.
Points synthetic_background(const PlaneModel& plane, double half_size, int n_plane, int n_clutter,
                            double clutter_height, std::uint64_t seed);

}  // namespace caper
