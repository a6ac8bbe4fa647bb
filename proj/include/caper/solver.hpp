#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "caper/geometry.hpp"
#include "caper/kinematics.hpp"
#include "caper/oracle.hpp"

namespace caper {

struct JointEstimate {
  JointType type = JointType::Fixed;
  Vec3 axis = Vec3::UnitZ();
  Vec3 location = Vec3::Zero();
  double confidence = 0.0;
};

/// Correspondences kept for a posed part: rest coordinates and their camera-frame points.
struct PartSupport {
  Points rest;
  Points cam;
};

struct PartEstimate {
  bool present = false;
  Similarity pose;
  std::vector<bool> inliers;  // mask over all M points of the instance
  std::size_t inlier_count = 0;
  double residual = 0.0;  // RMS of the fit over the inliers (meters)
  PartSupport support;
};

struct RefineReport {
  bool ran = false;
  bool no_constraints = false;
  bool converged = false;
  int iterations = 0;
  std::vector<double> objective_history;  // one entry per accepted iterate, starting with the initial
  double constraint_before = 0.0;
  double constraint_after = 0.0;
};

struct InstanceEstimate {
  std::vector<PartEstimate> parts;     // per part index - 1
  std::vector<std::optional<JointEstimate>> joints;  // per part index - 1
  RefineReport refine;

  int present_count() const;
};

struct RansacConfig {
  int iterations = 200;
  double inlier_tol_m = 0.01;
  int min_inliers = 4;
  std::uint64_t seed = 0;
};

struct RefineConfig {
  int max_iters = 50;
  double tol = 1e-10;
  double mu = 1.0;
};

struct SolverConfig {
  RansacConfig ransac;
  RefineConfig refine;
  int min_points = 3;
  /// Vote distance under which a joint-location vote counts toward the estimate's confidence.
  double joint_inlier_tol = 0.02;
  bool refine_enabled = true;
};

/// Least-squares similarity dst ~ s R src + t (closed form via SVD, reflections excluded).
Similarity umeyama(const Points& src, const Points& dst);

struct RansacResult {
  Similarity pose;
  std::vector<bool> inliers;
  std::size_t inlier_count = 0;
};

/// 4-point RANSAC over umeyama with a final refit on the inliers.
RansacResult ransac_pose(const Points& src, const Points& dst, const RansacConfig& cfg);

/// Mean of the per-point axes predicted for part `k`, renormalized.
Vec3 aggregate_joint_axis(const PredictionSet& pred, int part);

/// Coordinate-wise median of the location votes of part `k`. With `anchor`, the returned point
/// is moved along `axis` to the point of the joint line closest to the anchor.
Vec3 vote_joint_location(const PredictionSet& pred, int part, const Vec3& axis,
                         const std::optional<Vec3>& anchor = std::nullopt);

/// Arithmetic mean of the location votes (the direct-regression baseline).
Vec3 mean_joint_location(const PredictionSet& pred, int part);

/// Argmax of the summed type probabilities; ties go to Fixed, then Prismatic.
JointType classify_joint_type(const PredictionSet& pred, int part);

InstanceEstimate solve_instance(const PredictionSet& pred, const Points& points_cam,
                                const std::vector<NocsFrame>& frames, const std::vector<KinematicEdge>& tree,
                                const SolverConfig& cfg);

/// Joint-constrained pose refinement over all present parts with one shared scale.
///
/// Minimizes  sum_k mean_j |s R_k x_j + t_k - y_j|^2  +  mu * sum_edges C(edge)  where the joint
/// axis and pivot of each edge are carried into the parent's rest frame through the parent's
/// initial pose. Per joint type:
///   revolute   |R_c u - R_p u|^2 + |(I - a a^T)(pivot_c - pivot_p)|^2,  a = R_p u
///   prismatic  |R_c - R_p|_F^2 + |(I - a a^T)(t_c - t_p)|^2
///   fixed      |R_c - R_p|_F^2 + |t_c - t_p|^2
/// Damped Gauss-Newton with an exponential-map rotation update; only steps that lower the
/// objective are accepted. Joint estimates are held fixed.
InstanceEstimate constrained_refine(const InstanceEstimate& initial,
                                    const std::vector<std::optional<JointEstimate>>& joints,
                                    const std::vector<KinematicEdge>& tree, const RefineConfig& cfg);

}  // namespace caper
