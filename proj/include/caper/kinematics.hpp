#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caper/geometry.hpp"

namespace caper {

enum class JointType { Fixed = 0, Prismatic = 1, Revolute = 2 };

const char* to_string(JointType type);
JointType joint_type_from_string(std::string_view name);

struct Limits {
  double min = 0.0;
  double max = 0.0;

  bool contains(double v) const { return v >= min && v <= max; }
};

/// A joint connecting `parent` to `child`. Axis and pivot live in the parent part's frame,
/// which coincides with the object frame at the rest state.
struct JointSpec {
  JointType type = JointType::Fixed;
  Vec3 axis = Vec3::UnitZ();
  Vec3 pivot = Vec3::Zero();
  Limits limits;
  int parent = 1;
  int child = 2;
};

/// A rigid part. Indices run 1..K; label 0 is reserved for background.
struct Part {
  int index = 1;
  std::string name;
  Points rest_points;
};

/// Canonical unit cube of a part at rest:
///   nocs = basis^T (p - center) / scale + (0.5, 0.5, 0.5)
struct NocsFrame {
  Vec3 center = Vec3::Zero();
  double scale = 1.0;
  Mat3 basis = Mat3::Identity();

  Vec3 to_nocs(const Vec3& p) const;
  Vec3 from_nocs(const Vec3& nocs) const;
};

struct ArticulatedModel {
  std::string category;
  std::vector<Part> parts;
  std::vector<JointSpec> joints;
  std::vector<NocsFrame> nocs_frames;
  int root = 1;

  int num_parts() const { return static_cast<int>(parts.size()); }
  const Part& part(int index) const { return parts.at(static_cast<std::size_t>(index - 1)); }
  const NocsFrame& frame(int index) const {
    return nocs_frames.at(static_cast<std::size_t>(index - 1));
  }
  /// Joint whose child is `part_index`, or nullptr for the root.
  const JointSpec* joint_to(int part_index) const;
  /// Index into `joints` of the joint whose child is `part_index`, or -1.
  int joint_index_to(int part_index) const;
};

/// Parent -> child edge of the kinematic tree.
struct KinematicEdge {
  int parent = 1;
  int child = 2;
};

/// Frame derived from the part's rest points: center of the tight box, scale = longest side.
NocsFrame compute_nocs_frame(const Points& rest_points);

/// Tight rest-state box of a part (object frame).
OrientedBox rest_box(const Part& part);

/// Validates structure and fills nocs_frames when empty. Axes within 1e-6 of unit length are
/// renormalized; anything further off is rejected.
ArticulatedModel validate_model(ArticulatedModel model);

/// Parses and validates a model document (JSON).
ArticulatedModel load_model(std::string_view document);
ArticulatedModel load_model_file(const std::string& path);
std::string dump_model(const ArticulatedModel& model);

/// Motion of a child relative to its parent for joint state `value`.
RigidTransform joint_motion(const JointSpec& joint, double value);

/// Per-part object-frame poses, indexed by part index - 1. The root stays at identity.
std::vector<RigidTransform> forward_kinematics(const ArticulatedModel& model,
                                               const std::vector<double>& joint_states);

std::vector<KinematicEdge> kinematic_edges(const ArticulatedModel& model);

Points nocs_of_points(const NocsFrame& frame, const Points& points);
Points points_of_nocs(const NocsFrame& frame, const Points& nocs);

/// Number of entries of `nocs` outside [0,1]^3 (diagnostic for non-rest input).
std::size_t count_outside_unit_cube(const Points& nocs, double tol = 1e-12);

}  // namespace caper
