#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "caper/io.hpp"
#include "caper/metrics.hpp"
#include "caper/oracle.hpp"
#include "caper/scenegen.hpp"
#include "caper/solver.hpp"

namespace caper {

/// Exit statuses of the run_* entry points.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitPlacement = 3, kExitPipeline = 4 };

struct CameraSetup {
  double fx = 600.0, fy = 600.0, cx = 320.0, cy = 240.0;
  int width = 640, height = 480;
  Vec3 eye{0.0, -0.75, 1.45};
  Vec3 target{0.0, 0.0, 0.75};
};

struct SceneSetup {
  int num_scenes = 10;
  PlacementConfig placement;
  double table_height = 0.75;
  double table_half_size = 0.6;
  int plane_points = 2000;
  int clutter_points = 400;
  double clutter_height = 0.3;
  PlaneRansacConfig plane_ransac;
  int points_per_instance = 600;
  int background_points = 0;
  CameraSetup camera;
};

struct RunConfig {
  std::string model_dir;
  std::string output_dir;
  std::uint64_t seed = 0;
  int threads = 1;
  SceneSetup scene;
  NoiseConfig noise;
  SolverConfig solver;
  MetricGrids grids;
  double iou2d_threshold = 0.5;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a run configuration document. Paths are used as given (relative to the working directory).
RunConfig parse_run_config(const std::string& document);
RunConfig load_run_config(const std::string& path);
/// Checks the invariants that depend on the filesystem (model_dir exists and holds models).
void check_run_config(const RunConfig& cfg);

CameraModel make_camera(const CameraSetup& setup);

int run_synth(const RunConfig& cfg, std::ostream& log);
int run_solve(const RunConfig& cfg, std::ostream& log);
int run_eval(const RunConfig& cfg, std::ostream& out, std::ostream& log, bool json_format);
int run_pipeline(const RunConfig& cfg, std::ostream& out, std::ostream& log, bool json_format);

/// Per-part evaluation records for one scene: ground-truth instances vs estimates.
std::vector<PartMatchRecord> scene_records(const SceneRecord& scene,
                                           const std::vector<const ArticulatedModel*>& gt_models,
                                           const std::vector<EstimateRecord>& estimates,
                                           const std::vector<const ArticulatedModel*>& est_models,
                                           double iou2d_threshold);

/// Translation error is measured at the part's box center.
PartMatchRecord part_record(const std::string& category, int part, const Similarity& gt, const Similarity& est,
                            const OrientedBox& rest_box_gt, const OrientedBox& rest_box_est);

}  // namespace caper
