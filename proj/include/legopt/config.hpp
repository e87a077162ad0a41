#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "legopt/geometry.hpp"
#include "legopt/metrics.hpp"
#include "legopt/optimizer.hpp"
#include "legopt/oracle.hpp"

namespace legopt {

inline constexpr int kConfigSchemaVersion = 1;

/// One segment as configured: outer dimensions plus either an explicit wall
/// thickness or a target mass the thickness is calibrated from.
struct SegmentConfig {
  double length = 0.0;
  double height = 0.0;
  double width = 0.0;
  std::optional<double> wall_thickness;
  std::optional<double> mass;
};

/// Thresholds of the `verify` pipeline (all pinned here, none tuned at runtime).
struct VerifyConfig {
  int sweep_states = 1000;
  std::uint64_t sweep_seed = 20240917;
  double power_balance_tolerance = 1.0;   // W at the configured sample count;
                                          // the O(dt^2) check also requires the
                                          // residual to shrink ~4x at 2x samples
  double roundtrip_dt = 1e-3;             // s
  double roundtrip_tolerance = 1e-3;      // rad
  double energy_drift_dt = 1e-4;          // s
  double energy_drift_tolerance = 1e-6;   // J over the full swing
};

/// Whole-run configuration; defaults reproduce the shipped initial design and
/// swing profile.
struct RunConfig {
  int schema_version = kConfigSchemaVersion;
  MaterialParams material;
  SegmentConfig coxa{0.140, 0.179, 0.121, std::nullopt, 6.06};
  SegmentConfig femur{0.460, 0.158, 0.183, std::nullopt, 20.09};
  SegmentConfig tibia{0.460, 0.144, 0.117, std::nullopt, 14.22};
  SwingWaypoints waypoints = default_waypoints();
  double total_time = 2.0;
  int samples_per_phase = 100;
  GAConfig ga;
  double bounds_margin = 0.35;
  EnergyMode energy_mode = EnergyMode::kAbsolute;
  OracleConfig oracle;
  VerifyConfig verify;
  std::string output_dir = "out";
};

/// Parses a config; unknown fields are rejected (fail-closed) with the JSON
/// path in the error message. Missing fields keep their defaults.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& cfg);

/// Resolves a SegmentConfig into dimensions: explicit wall thickness wins,
/// otherwise it is calibrated from the configured mass.
SegmentDims resolve_segment(const SegmentConfig& seg, double density);
LegGeometry resolve_geometry(const RunConfig& cfg);

/// Geometry JSON (the best_genome.json schema): per segment length/height/
/// width/wall_thickness. Round-trips through cmd_optimize output.
LegGeometry parse_geometry(const nlohmann::json& j);
LegGeometry load_geometry(const std::filesystem::path& path);
nlohmann::json geometry_to_json(const LegGeometry& geom);

}  // namespace legopt
