#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caper/oracle.hpp"
#include "caper/scenegen.hpp"
#include "caper/solver.hpp"

namespace caper {

struct SceneRecord {
  int scene_id = 0;
  CameraModel camera;
  PlaneModel plane;
  std::vector<SceneInstance> instances;
};

std::string dump_scene(const SceneRecord& scene);
SceneRecord parse_scene(const std::string& document);

/// Observation table: one comment line with instance metadata, one header line, then one
/// whitespace-separated row per point. jtype is 0 fixed, 1 prismatic, 2 revolute.
std::string dump_observation(const Observation& obs);
Observation parse_observation(const std::string& text);

/// Prediction table: the observation columns filled with predicted values, plus the three
/// joint-type probabilities.
std::string dump_prediction(const PredictionSet& pred, const Points& points_cam, const Points& colors);
PredictionSet parse_prediction(const std::string& text);

struct EstimateRecord {
  std::string instance_ref;
  std::string model_ref;
  bool failed = false;
  std::string failure;
  Box2d bbox2d;
  InstanceEstimate estimate;
};

std::string dump_estimate(const EstimateRecord& record);
EstimateRecord parse_estimate(const std::string& document);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace caper
