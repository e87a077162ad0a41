#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "legopt/metrics.hpp"

namespace legopt {

/// Nine design variables: l1,l2,l3, w1,w2,w3, h1,h2,h3 in meters.
/// Wall thicknesses are fixed per segment and are not part of the genome.
using Genome = Eigen::Matrix<double, 9, 1>;

/// How the per-joint torque/energy ratios collapse into the scalar objective.
enum class FitnessAggregation { kMeanOverJoints, kHipOnly };

struct GAConfig {
  int population_size = 100;
  int generations = 100;
  std::uint64_t seed = 42;
  double crossover_rate = 0.9;    // per offspring pair
  double mutation_rate = 0.1;     // per gene
  double mutation_sigma = 0.05;   // fraction of the per-gene bound range
  int tournament_size = 3;
  int elitism_count = 2;
  Genome lower_bounds = Genome::Zero();
  Genome upper_bounds = Genome::Zero();
  double reach_margin = 0.05;       // lambda: D >= (1 - lambda) D0
  double stiffness_margin = 0.15;   // mu: EIz >= (1 - mu) EIz0 per segment
  double penalty_coeff = 10000.0;   // k_p
  double torque_weight = 0.5;
  double energy_weight = 0.5;
  FitnessAggregation aggregation = FitnessAggregation::kMeanOverJoints;
  int threads = 1;
};

void validate(const GAConfig& cfg);

/// Bounds at +-margin around the initial genome.
void set_default_bounds(GAConfig& cfg, const Genome& initial, double margin = 0.35);

/// Scalar fitness with penalty decomposition for one candidate.
/// eval = objective + penalty_coeff * (torque_penalty + energy_penalty +
///        reach_penalty + stiffness_penalty); feasible iff all penalties zero.
struct FitnessReport {
  double eval = 0.0;
  double objective = 0.0;           // weighted torque/energy ratio term
  double torque_penalty = 0.0;      // max(0, ratio_T - 1)
  double energy_penalty = 0.0;      // max(0, ratio_Q - 1)
  double reach_penalty = 0.0;       // max(0, (1-lambda) D0 - D), meters
  double stiffness_penalty = 0.0;   // sum over segments, N m^2
  Eigen::Vector3d torque_ratio = Eigen::Vector3d::Zero();
  Eigen::Vector3d energy_ratio = Eigen::Vector3d::Zero();
  bool feasible = false;
};

struct Candidate {
  Genome genome = Genome::Zero();
  FitnessReport fitness;
};

/// Everything a fitness evaluation needs besides the genome: the shared
/// trajectory (waypoints are fixed in joint space), material constants, the
/// fixed per-segment wall thicknesses and the frozen baseline.
class FitnessEvaluator {
 public:
  FitnessEvaluator(Trajectory traj, MaterialParams mat, Eigen::Vector3d wall_thickness,
                   Baseline baseline, EnergyMode mode);

  LegGeometry geometry(const Genome& genome) const;
  FitnessReport operator()(const Genome& genome, const GAConfig& cfg) const;

  const Baseline& baseline() const { return baseline_; }
  const Trajectory& trajectory() const { return traj_; }
  const MaterialParams& material() const { return mat_; }
  const Eigen::Vector3d& wall_thickness() const { return wall_thickness_; }
  EnergyMode energy_mode() const { return mode_; }

 private:
  Trajectory traj_;
  MaterialParams mat_;
  Eigen::Vector3d wall_thickness_;
  Baseline baseline_;
  EnergyMode mode_;
};

/// Penalty-augmented fitness from already-computed metric values.
FitnessReport fitness_from_metrics(const MetricValues& values, const Baseline& base,
                                   const GAConfig& cfg);

Genome genome_from_geometry(const LegGeometry& geom);
LegGeometry geometry_from_genome(const Genome& genome, const Eigen::Vector3d& wall_thickness);

struct HistoryPoint {
  int generation = 0;
  double best_eval = 0.0;
  double best_objective = 0.0;
  double torque_penalty = 0.0;
  double energy_penalty = 0.0;
  double reach_penalty = 0.0;
  double stiffness_penalty = 0.0;
};

struct GAResult {
  Candidate best;
  std::vector<HistoryPoint> history;      // one entry per generation, gen 0 = initial pop
  int convergence_generation = -1;        // first generation after which the best eval
                                          // changed < 1e-6 for 10 consecutive generations
  bool feasible = false;                  // best candidate satisfies every constraint
};

/// Tournament selection, per-gene blend crossover, per-gene Gaussian mutation
/// clamped to bounds, elitism. Deterministic for a fixed seed at any thread
/// count: all random draws happen on the driving thread in a fixed order and
/// fitness evaluations are pure; ranking sorts by (eval, genome) so ties break
/// identically everywhere.
///
/// When initial_population is empty, individual 0 is the baseline genome and
/// the rest are sampled uniformly within bounds.
GAResult run_ga(const GAConfig& cfg, const FitnessEvaluator& evaluator,
                const Genome& initial_genome,
                const std::vector<Genome>& initial_population = {});

}  // namespace legopt
