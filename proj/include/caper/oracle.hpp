#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "caper/geometry.hpp"
#include "caper/kinematics.hpp"
#include "caper/scenegen.hpp"

namespace caper {

using TypeProbs = std::array<double, 3>;  // Fixed, Prismatic, Revolute

/// Per-point predictions for one instance.
struct PredictionSet {
  int num_parts = 0;
  std::vector<int> seg;
  Points nocs;
  Points joint_loc;
  Points joint_axis;
  std::vector<TypeProbs> joint_type_probs;

  std::size_t size() const { return seg.size(); }
  void validate() const;
};

JointType argmax_type(const TypeProbs& probs);

struct NoiseConfig {
  double nocs_sigma = 0.0;
  double seg_flip_prob = 0.0;
  double outlier_frac = 0.0;
  double axis_angle_sigma = 0.0;  // radians
  double loc_sigma = 0.0;         // meters
  /// Fraction of joint-location votes replaced by a uniform draw within loc_outlier_range of the truth.
  double loc_outlier_frac = 0.0;
  double loc_outlier_range = 0.25;
  /// Row g is the predicted type distribution for ground-truth type g.
  std::array<TypeProbs, 3> type_confusion = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  /// When true, one joint-noise draw is shared by all parts on top of the per-point noise.
  bool class_agnostic = false;

  void validate() const;
};

/// Multi-task loss weights, in order: segmentation, NOCS, joint location, joint axis, joint type.
struct LossWeights {
  double seg = 1.0;
  double nocs = 10.0;
  double loc = 1.0;
  double ax = 0.5;
  double type = 1.0;
};

struct LossBreakdown {
  double seg = 0, nocs = 0, loc = 0, ax = 0, type = 0, total = 0;
};

/// Probability floor used for the cross-entropy of hard labels.
inline constexpr double kSegEpsilon = 1e-6;

/// Corrupts the ground-truth channels of `obs` into a prediction.
PredictionSet perturb(const Observation& obs, const NoiseConfig& cfg, std::uint64_t seed);

/// Prediction that reproduces the ground truth exactly.
PredictionSet ground_truth_prediction(const Observation& obs);

LossBreakdown multitask_loss(const PredictionSet& pred, const Observation& obs, const LossWeights& w = {});

/// Elementwise soft IoU of two distributions over the joint types, summed.
double soft_type_iou(const TypeProbs& p, const TypeProbs& g);

}  // namespace caper
