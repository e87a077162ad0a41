#pragma once

#include <filesystem>
#include <string>

#include "legopt/dynamics.hpp"
#include "legopt/geometry.hpp"
#include "legopt/optimizer.hpp"
#include "legopt/simcheck.hpp"
#include "legopt/trajectory.hpp"

namespace legopt {

/// Shortest representation that round-trips the exact double value.
std::string format_double(double value);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// CSV writers; all files carry a header row, comma separators, SI units.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);
void write_foot_path_csv(const std::filesystem::path& path, const LegGeometry& geom,
                         const Trajectory& traj, double base_height);
void write_torque_csv(const std::filesystem::path& path, const TorqueTrace& trace);
void write_power_csv(const std::filesystem::path& path, const PowerCurves& curves);
void write_history_csv(const std::filesystem::path& path,
                       const std::vector<HistoryPoint>& history);

}  // namespace legopt
