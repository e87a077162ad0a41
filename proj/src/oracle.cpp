#include "legopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace legopt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double ek(const DynamicsParams& p, const Eigen::Vector3d& q, const Eigen::Vector3d& w) {
  return kinetic_energy(p, {q, w, Eigen::Vector3d::Zero()});
}

double ep(const DynamicsParams& p, const Eigen::Vector3d& q) {
  return potential_energy(p, {q, Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()});
}

// dEk/dw_i with a unit step: exact for the quadratic-in-w energy, so the
// difference carries no truncation error and almost no cancellation.
double momentum(const DynamicsParams& p, const Eigen::Vector3d& q, const Eigen::Vector3d& w,
                int i) {
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e[i] = 1.0;
  return 0.5 * (ek(p, q, w + e) - ek(p, q, w - e));
}

}  // namespace

void validate(const OracleConfig& cfg) {
  if (!(cfg.angle_step > 0.0) || !(cfg.time_step > 0.0) || !(cfg.tolerance > 0.0)) {
    throw ConfigError("oracle steps and tolerance must be positive");
  }
}

FdTorques fd_torques(const DynamicsParams& p, const JointState& s, const OracleConfig& cfg) {
  validate(cfg);
  const Eigen::Vector3d& q = s.angle;
  const Eigen::Vector3d& w = s.velocity;
  const Eigen::Vector3d& qdd = s.acceleration;
  const double dq = cfg.angle_step;

  FdTorques out;
  Eigen::Vector3d ddt_chain = Eigen::Vector3d::Zero();
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3d ei = Eigen::Vector3d::Zero();
    ei[i] = 1.0;
    double term = 0.0;
    for (int j = 0; j < 3; ++j) {
      Eigen::Vector3d ej = Eigen::Vector3d::Zero();
      ej[j] = 1.0;
      // d2Ek/dw_i dw_j, exact second difference (unit steps)
      const double mij = 0.25 * (ek(p, q, w + ei + ej) - ek(p, q, w + ei - ej) -
                                 ek(p, q, w - ei + ej) + ek(p, q, w - ei - ej));
      term += mij * qdd[j];
      // d2Ek/dw_i dtheta_j
      const double dpij =
          (momentum(p, q + dq * ej, w, i) - momentum(p, q - dq * ej, w, i)) / (2.0 * dq);
      term += dpij * w[j];
    }
    ddt_chain[i] = term;
    const double dek = (ek(p, q + dq * ei, w) - ek(p, q - dq * ei, w)) / (2.0 * dq);
    const double dep = (ep(p, q + dq * ei) - ep(p, q - dq * ei)) / (2.0 * dq);
    out.torque[i] = term - dek + dep;
  }

  // Independent estimate of the d/dt term along the constant-acceleration
  // path; disagreement beyond tolerance means a step hit its cancellation
  // floor and the result cannot be trusted at the requested tolerance.
  const double dt = cfg.time_step;
  const Eigen::Vector3d q_fwd = q + dt * w + 0.5 * dt * dt * qdd;
  const Eigen::Vector3d q_bwd = q - dt * w + 0.5 * dt * dt * qdd;
  const Eigen::Vector3d w_fwd = w + dt * qdd;
  const Eigen::Vector3d w_bwd = w - dt * qdd;
  Eigen::Vector3d ddt_path;
  for (int i = 0; i < 3; ++i) {
    ddt_path[i] = (momentum(p, q_fwd, w_fwd, i) - momentum(p, q_bwd, w_bwd, i)) / (2.0 * dt);
  }

  const double scale = std::max({out.torque.cwiseAbs().maxCoeff(), 1.0});
  const double route_gap = (ddt_chain - ddt_path).cwiseAbs().maxCoeff();
  const double energy_scale = std::max({std::abs(ek(p, q, w)), std::abs(ep(p, q)), 1.0});
  const double noise_floor = kEps * energy_scale / std::min(dq, dt);
  out.low_confidence =
      route_gap > cfg.tolerance * scale || noise_floor > cfg.tolerance * scale;
  return out;
}

SweepReport torque_sweep(const DynamicsParams& p, int states, std::uint64_t seed,
                         const OracleConfig& cfg) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  SweepReport report;
  report.states = states;
  double sum = 0.0;
  for (int k = 0; k < states; ++k) {
    JointState s;
    for (int i = 0; i < 3; ++i) s.angle[i] = uniform(-M_PI, M_PI);
    for (int i = 0; i < 3; ++i) s.velocity[i] = uniform(-10.0, 10.0);
    for (int i = 0; i < 3; ++i) s.acceleration[i] = uniform(-50.0, 50.0);
    const Eigen::Vector3d closed = inverse_dynamics(p, s);
    const FdTorques fd = fd_torques(p, s, cfg);
    if (fd.low_confidence) ++report.low_confidence_count;
    const double denom =
        std::max({closed.cwiseAbs().maxCoeff(), fd.torque.cwiseAbs().maxCoeff(), 1.0});
    const double err = (closed - fd.torque).cwiseAbs().maxCoeff() / denom;
    report.max_error = std::max(report.max_error, err);
    sum += err;
  }
  report.mean_error = states > 0 ? sum / states : 0.0;
  report.pass = report.max_error < cfg.tolerance && report.low_confidence_count == 0;
  return report;
}

PowerBalanceReport check_power_balance(const TorqueTrace& trace, const Trajectory& traj,
                                       const DynamicsParams& p) {
  const auto& samples = traj.samples();
  if (trace.size() != samples.size()) {
    throw AlignmentError("trace and trajectory sample counts differ");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (trace.time[i] != samples[i].time) {
      throw AlignmentError("trace and trajectory time grids differ");
    }
  }
  const std::size_t n = samples.size();
  if (n < 3) {
    throw EmptyInputError("power balance needs at least three samples");
  }
  std::vector<double> energy(n);
  std::vector<double> power(n);
  for (std::size_t i = 0; i < n; ++i) {
    const JointState s{samples[i].angle, samples[i].velocity, samples[i].acceleration};
    energy[i] = kinetic_energy(p, s) + potential_energy(p, s);
    power[i] = trace.torque[i].dot(samples[i].velocity);
  }
  PowerBalanceReport report;
  report.samples = n;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dedt;
    if (i == 0) {
      const double dt = trace.time[1] - trace.time[0];
      dedt = (-3.0 * energy[0] + 4.0 * energy[1] - energy[2]) / (2.0 * dt);
    } else if (i == n - 1) {
      const double dt = trace.time[n - 1] - trace.time[n - 2];
      dedt = (3.0 * energy[n - 1] - 4.0 * energy[n - 2] + energy[n - 3]) / (2.0 * dt);
    } else {
      dedt = (energy[i + 1] - energy[i - 1]) / (trace.time[i + 1] - trace.time[i - 1]);
    }
    const double res = std::abs(power[i] - dedt);
    report.max_residual = std::max(report.max_residual, res);
    sq += res * res;
  }
  report.rms_residual = std::sqrt(sq / static_cast<double>(n));
  return report;
}

}  // namespace legopt
