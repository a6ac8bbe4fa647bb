#pragma once

#include <map>
#include <string>
#include <vector>

#include "caper/geometry.hpp"

namespace caper {

/// Geodesic angle between two rotations, degrees in [0, 180].
double rotation_error(const Mat3& Ra, const Mat3& Rb);

/// Intersection over union of two oriented boxes. The intersection volume comes from clipping
/// B against the six half-spaces of A.
double iou3d(const OrientedBox& a, const OrientedBox& b);

/// Volume of the intersection of two oriented boxes.
double intersection_volume(const OrientedBox& a, const OrientedBox& b);

struct Association {
  std::vector<std::pair<std::size_t, std::size_t>> matches;  // (pred, gt)
  std::vector<std::size_t> false_positives;
  std::vector<std::size_t> false_negatives;
};

/// Greedy one-to-one matching by descending 2D IoU; pairs below the threshold stay unmatched.
Association match_instances(const std::vector<Box2d>& pred, const std::vector<Box2d>& gt,
                            double iou2d_threshold = 0.5);

struct PartMatchRecord {
  std::string category;
  int part = 1;
  double rot_err_deg = 180.0;
  double trans_err_m = 0.0;
  double iou3d = 0.0;
  bool matched = false;
};

enum class ErrorKindAP { Rotation, Translation, IoU };

struct MetricGrids {
  std::vector<double> rot_deg = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> trans_m = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10};
  std::vector<double> iou = {0.50, 0.55, 0.60, 0.65, 0.70};
};

struct APResult {
  std::vector<double> per_threshold;  // percent, aligned with the requested thresholds
  double averaged = 0.0;              // percent, mean over the grid
};

/// AP@tau = matched parts with error < tau (iou >= tau) over all ground-truth parts, in percent.
APResult average_precision(const std::vector<PartMatchRecord>& records, ErrorKindAP kind,
                           const std::vector<double>& thresholds, const MetricGrids& grids = {});

struct PoseAccuracy {
  double rot = 0, trans = 0, iou = 0;  // percent
};

PoseAccuracy pose_accuracy(const std::vector<PartMatchRecord>& records, double rot_deg = 10.0,
                           double trans_m = 0.10, double iou = 0.7);

struct ReportRow {
  std::string category;
  std::size_t parts = 0;
  double ap_rot_1_10 = 0, ap_rot_5 = 0, ap_rot_10 = 0;
  double ap_trans_1_10 = 0, ap_trans_5 = 0, ap_trans_10 = 0;
  double ap_iou_05_07 = 0, ap_iou_05 = 0, ap_iou_07 = 0;
  PoseAccuracy cape;
};

struct EvalReport {
  std::vector<ReportRow> rows;  // sorted by category
  ReportRow mean;               // unweighted mean over categories
};

EvalReport build_report(const std::vector<PartMatchRecord>& records, const MetricGrids& grids = {});

/// Comma-separated table, one row per category plus "mean".
std::string report_table(const EvalReport& report);
std::string report_json(const EvalReport& report);

}  // namespace caper
