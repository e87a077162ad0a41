#include "legopt/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

namespace legopt {

namespace {

// All stochastic draws go through this wrapper so runs are reproducible for a
// fixed seed independent of platform distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int index(int n) { return std::min(n - 1, static_cast<int>(uniform01() * n)); }

  // Box-Muller; two uniforms per draw, second value discarded so the draw
  // count per call is fixed.
  double gaussian() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 gen_;
};

bool genome_less(const Genome& a, const Genome& b) {
  for (int i = 0; i < 9; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// Ranking order: eval first, genome lexicographic on ties, so parallel and
// serial runs rank identically.
bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.fitness.eval < b.fitness.eval) return true;
  if (a.fitness.eval > b.fitness.eval) return false;
  return genome_less(a.genome, b.genome);
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::thread> pool;
  const int count = std::min(threads, n);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

void validate(const GAConfig& cfg) {
  if (cfg.population_size < 2) throw ConfigError("population_size must be >= 2");
  if (cfg.generations < 0) throw ConfigError("generations must be >= 0");
  if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
    throw ConfigError("crossover_rate must be in [0,1]");
  if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0)
    throw ConfigError("mutation_rate must be in [0,1]");
  if (!(cfg.mutation_sigma >= 0.0)) throw ConfigError("mutation_sigma must be >= 0");
  if (cfg.tournament_size < 1) throw ConfigError("tournament_size must be >= 1");
  if (cfg.elitism_count < 0 || cfg.elitism_count >= cfg.population_size)
    throw ConfigError("elitism_count must be in [0, population_size)");
  for (int i = 0; i < 9; ++i) {
    if (!(cfg.lower_bounds[i] < cfg.upper_bounds[i]))
      throw ConfigError("bounds must satisfy lower < upper for every gene");
  }
  if (!(cfg.reach_margin < 1.0) || !(cfg.stiffness_margin < 1.0))
    throw ConfigError("constraint margins must be < 1");
  if (!(cfg.penalty_coeff >= 0.0)) throw ConfigError("penalty_coeff must be >= 0");
  if (!(cfg.torque_weight >= 0.0) || !(cfg.energy_weight >= 0.0))
    throw ConfigError("objective weights must be >= 0");
}

void set_default_bounds(GAConfig& cfg, const Genome& initial, double margin) {
  cfg.lower_bounds = initial * (1.0 - margin);
  cfg.upper_bounds = initial * (1.0 + margin);
}

Genome genome_from_geometry(const LegGeometry& geom) {
  Genome g;
  for (int i = 0; i < 3; ++i) {
    g[i] = geom.segment(i).length;
    g[3 + i] = geom.segment(i).width;
    g[6 + i] = geom.segment(i).height;
  }
  return g;
}

LegGeometry geometry_from_genome(const Genome& genome, const Eigen::Vector3d& wall_thickness) {
  LegGeometry geom;
  for (int i = 0; i < 3; ++i) {
    geom.segment(i) =
        SegmentDims{genome[i], genome[3 + i], genome[6 + i], wall_thickness[i]};
  }
  return geom;
}

FitnessReport fitness_from_metrics(const MetricValues& values, const Baseline& base,
                                   const GAConfig& cfg) {
  FitnessReport r;
  r.torque_ratio = values.peak_torque.cwiseQuotient(base.peak_torque);
  r.energy_ratio = values.joint_energy.cwiseQuotient(base.joint_energy);
  double ratio_t, ratio_q;
  if (cfg.aggregation == FitnessAggregation::kHipOnly) {
    ratio_t = r.torque_ratio[1];
    ratio_q = r.energy_ratio[1];
  } else {
    ratio_t = r.torque_ratio.sum() / 3.0;
    ratio_q = r.energy_ratio.sum() / 3.0;
  }
  r.objective = cfg.torque_weight * ratio_t + cfg.energy_weight * ratio_q;
  r.torque_penalty = std::max(0.0, ratio_t - 1.0);
  r.energy_penalty = std::max(0.0, ratio_q - 1.0);
  r.reach_penalty = std::max(0.0, (1.0 - cfg.reach_margin) * base.reach - values.reach);
  r.stiffness_penalty = 0.0;
  for (int i = 0; i < 3; ++i) {
    r.stiffness_penalty += std::max(
        0.0, (1.0 - cfg.stiffness_margin) * base.bending_stiffness[i] -
                 values.bending_stiffness[i]);
  }
  const double total =
      r.torque_penalty + r.energy_penalty + r.reach_penalty + r.stiffness_penalty;
  r.eval = r.objective + cfg.penalty_coeff * total;
  r.feasible = total == 0.0;
  return r;
}

FitnessEvaluator::FitnessEvaluator(Trajectory traj, MaterialParams mat,
                                   Eigen::Vector3d wall_thickness, Baseline baseline,
                                   EnergyMode mode)
    : traj_(std::move(traj)),
      mat_(mat),
      wall_thickness_(std::move(wall_thickness)),
      baseline_(baseline),
      mode_(mode) {}

LegGeometry FitnessEvaluator::geometry(const Genome& genome) const {
  return geometry_from_genome(genome, wall_thickness_);
}

FitnessReport FitnessEvaluator::operator()(const Genome& genome, const GAConfig& cfg) const {
  return fitness_from_metrics(evaluate(geometry(genome), traj_, mat_, mode_), baseline_, cfg);
}

GAResult run_ga(const GAConfig& cfg, const FitnessEvaluator& evaluator,
                const Genome& initial_genome, const std::vector<Genome>& initial_population) {
  validate(cfg);
  // the whole box must map to valid geometry; the lower corner is the worst
  // case for the fixed wall thickness
  validate(geometry_from_genome(cfg.lower_bounds, evaluator.wall_thickness()));

  Rng rng(cfg.seed);
  const int pop_size = cfg.population_size;
  const int threads = cfg.threads <= 0
                          ? static_cast<int>(std::thread::hardware_concurrency())
                          : cfg.threads;

  std::vector<Candidate> pop(pop_size);
  if (!initial_population.empty()) {
    for (int i = 0; i < pop_size; ++i) {
      pop[i].genome = initial_population[i % initial_population.size()];
    }
  } else {
    pop[0].genome = initial_genome;
    for (int i = 1; i < pop_size; ++i) {
      for (int g = 0; g < 9; ++g) {
        pop[i].genome[g] = rng.uniform(cfg.lower_bounds[g], cfg.upper_bounds[g]);
      }
    }
  }

  auto evaluate_all = [&](std::vector<Candidate>& cands) {
    parallel_for(static_cast<int>(cands.size()), threads,
                 [&](int i) { cands[i].fitness = evaluator(cands[i].genome, cfg); });
  };
  evaluate_all(pop);

  GAResult result;
  Candidate best_overall = *std::min_element(pop.begin(), pop.end(), candidate_less);
  bool have_feasible = best_overall.fitness.feasible;
  Candidate best_feasible = best_overall;

  auto record = [&](int generation) {
    const Candidate& b = *std::min_element(pop.begin(), pop.end(), candidate_less);
    result.history.push_back({generation, b.fitness.eval, b.fitness.objective,
                              b.fitness.torque_penalty, b.fitness.energy_penalty,
                              b.fitness.reach_penalty, b.fitness.stiffness_penalty});
  };
  record(0);

  const Genome sigma = cfg.mutation_sigma * (cfg.upper_bounds - cfg.lower_bounds);
  for (int gen = 1; gen <= cfg.generations; ++gen) {
    std::vector<int> order(pop_size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return candidate_less(pop[a], pop[b]); });

    std::vector<Candidate> next;
    next.reserve(pop_size);
    for (int e = 0; e < cfg.elitism_count; ++e) next.push_back(pop[order[e]]);

    auto tournament = [&]() -> const Genome& {
      int best = rng.index(pop_size);
      for (int k = 1; k < cfg.tournament_size; ++k) {
        const int challenger = rng.index(pop_size);
        if (candidate_less(pop[challenger], pop[best])) best = challenger;
      }
      return pop[best].genome;
    };

    while (static_cast<int>(next.size()) < pop_size) {
      Genome c1 = tournament();
      Genome c2 = tournament();
      if (rng.uniform01() < cfg.crossover_rate) {
        for (int g = 0; g < 9; ++g) {
          const double u = rng.uniform01();
          const double a = c1[g], b = c2[g];
          // identical parents blend to themselves exactly
          c1[g] = b + u * (a - b);
          c2[g] = a + u * (b - a);
        }
      }
      for (Genome* child : {&c1, &c2}) {
        for (int g = 0; g < 9; ++g) {
          if (rng.uniform01() < cfg.mutation_rate) {
            (*child)[g] += rng.gaussian() * sigma[g];
          }
          (*child)[g] = std::clamp((*child)[g], cfg.lower_bounds[g], cfg.upper_bounds[g]);
        }
        if (static_cast<int>(next.size()) < pop_size) {
          next.push_back({*child, {}});
        }
      }
    }

    // elites keep their evaluated fitness; only offspring are evaluated
    std::vector<Candidate> fresh(next.begin() + cfg.elitism_count, next.end());
    evaluate_all(fresh);
    std::copy(fresh.begin(), fresh.end(), next.begin() + cfg.elitism_count);
    pop = std::move(next);

    for (const Candidate& c : pop) {
      if (candidate_less(c, best_overall)) best_overall = c;
      if (c.fitness.feasible && (!have_feasible || candidate_less(c, best_feasible))) {
        best_feasible = c;
        have_feasible = true;
      }
    }
    record(gen);
  }

  result.best = have_feasible ? best_feasible : best_overall;
  result.feasible = have_feasible;
  result.convergence_generation = -1;
  int streak = 0;
  for (std::size_t i = 1; i < result.history.size(); ++i) {
    const double delta =
        std::abs(result.history[i].best_eval - result.history[i - 1].best_eval);
    streak = delta < 1e-6 ? streak + 1 : 0;
    if (streak >= 10 && result.convergence_generation < 0) {
      result.convergence_generation = result.history[i].generation - 10;
    }
  }
  return result;
}

}  // namespace legopt
