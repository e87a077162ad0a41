#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "legopt/config.hpp"

namespace legopt::cli {

/// Process exit codes; every failure class gets its own code.
enum ExitCode {
  kOk = 0,
  kConfigError = 2,        // malformed/unknown config fields, bad flags
  kValidationError = 3,    // inputs violate domain invariants
  kVerificationFailure = 4,
  kInfeasibleResult = 5,
  kRuntimeFailure = 6,
};

struct CommandOptions {
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path output_dir;        // empty -> config's output_dir
  std::optional<std::uint64_t> seed;       // overrides config's GA seed
  std::optional<std::string> energy_mode;  // "absolute" | "signed"
  std::optional<int> threads;
  std::optional<std::filesystem::path> geometry_path;  // evaluate/simulate input
};

/// Writes trajectory.csv and foot_path.csv.
int cmd_plan(const CommandOptions& opts);

/// Writes torque_trace.csv, metrics.json and report.txt (ratios to the
/// baseline when a separate geometry is supplied; reference-target comparison
/// with a convention-toggle investigation when evaluating the initial design).
int cmd_evaluate(const CommandOptions& opts);

/// Runs the GA; writes history.csv, best_genome.json and comparison.txt.
int cmd_optimize(const CommandOptions& opts);

/// Oracle sweep, power balance, forward round-trip, inertia probes; writes
/// verify_report.txt and fails the process when any check exceeds tolerance.
int cmd_verify(const CommandOptions& opts);

/// Forward simulation under inverse-dynamics torques; writes power_initial.csv
/// (+ power_optimized.csv when a geometry is supplied) and sim_summary.json.
int cmd_simulate(const CommandOptions& opts);

}  // namespace legopt::cli
