#include "legopt/simcheck.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace legopt {

namespace {

constexpr double kRateGuard = 1e3;  // rad/s, beyond this the integration is declared unstable

// qdd = M^{-1} (tau - bias); checks M for symmetry and positive definiteness.
Eigen::Vector3d acceleration(const DynamicsParams& p, const Eigen::Vector3d& angle,
                             const Eigen::Vector3d& velocity, const Eigen::Vector3d& tau) {
  const Eigen::Matrix3d m = extract_mass_matrix(p, angle);
  const Eigen::Vector3d bias =
      inverse_dynamics(p, {angle, velocity, Eigen::Vector3d::Zero()});
  Eigen::LLT<Eigen::Matrix3d> llt(m);
  if (llt.info() != Eigen::Success) {
    throw SingularInertiaError("inertia matrix not positive definite at pose (" +
                               std::to_string(angle[0]) + ", " + std::to_string(angle[1]) +
                               ", " + std::to_string(angle[2]) + ")");
  }
  return llt.solve(tau - bias);
}

}  // namespace

PowerCurves power_curves(const TorqueTrace& trace) {
  if (trace.empty()) {
    throw EmptyInputError("power_curves needs a non-empty trace");
  }
  PowerCurves curves;
  curves.time = trace.time;
  curves.power = trace.power;
  for (const auto& p : trace.power) {
    curves.peak = curves.peak.cwiseMax(p.cwiseAbs());
  }
  return curves;
}

Eigen::Matrix3d extract_mass_matrix(const DynamicsParams& p, const Eigen::Vector3d& angle) {
  DynamicsParams no_gravity = p;
  no_gravity.gravity = 0.0;
  const Eigen::Vector3d bias =
      inverse_dynamics(no_gravity, {angle, Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()});
  Eigen::Matrix3d m;
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d unit = Eigen::Vector3d::Zero();
    unit[k] = 1.0;
    m.col(k) = inverse_dynamics(no_gravity, {angle, Eigen::Vector3d::Zero(), unit}) - bias;
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  const double scale = m.cwiseAbs().maxCoeff();
  if (asym > 1e-9 * std::max(scale, 1.0)) {
    throw SingularInertiaError("extracted inertia matrix is not symmetric");
  }
  const Eigen::Vector3d eig = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m).eigenvalues();
  if (!(eig.minCoeff() > 1e-12 * std::max(eig.maxCoeff(), 1.0))) {
    throw SingularInertiaError("inertia matrix degenerate (min eigenvalue " +
                               std::to_string(eig.minCoeff()) + ")");
  }
  return m;
}

SimResult forward_simulate(const DynamicsParams& p, const TorqueProfile& torque,
                           const JointState& initial, double duration, double dt) {
  if (!(dt > 0.0) || !(duration > 0.0)) {
    throw InvalidDurationError("simulation duration and step must be positive");
  }
  const int steps = static_cast<int>(std::llround(duration / dt));
  Eigen::Vector3d q = initial.angle;
  Eigen::Vector3d w = initial.velocity;

  SimResult result;
  result.time.reserve(steps + 1);
  result.angle.reserve(steps + 1);
  result.velocity.reserve(steps + 1);
  result.power.reserve(steps + 1);
  auto push = [&](double t) {
    const Eigen::Vector3d pw = torque(t).cwiseProduct(w);
    result.time.push_back(t);
    result.angle.push_back(q);
    result.velocity.push_back(w);
    result.power.push_back(pw);
    result.peak_power = result.peak_power.cwiseMax(pw.cwiseAbs());
  };
  push(0.0);

  for (int i = 0; i < steps; ++i) {
    const double t = i * dt;
    const Eigen::Vector3d k1q = w;
    const Eigen::Vector3d k1w = acceleration(p, q, w, torque(t));
    const Eigen::Vector3d k2q = w + 0.5 * dt * k1w;
    const Eigen::Vector3d k2w =
        acceleration(p, q + 0.5 * dt * k1q, w + 0.5 * dt * k1w, torque(t + 0.5 * dt));
    const Eigen::Vector3d k3q = w + 0.5 * dt * k2w;
    const Eigen::Vector3d k3w =
        acceleration(p, q + 0.5 * dt * k2q, w + 0.5 * dt * k2w, torque(t + 0.5 * dt));
    const Eigen::Vector3d k4q = w + dt * k3w;
    const Eigen::Vector3d k4w =
        acceleration(p, q + dt * k3q, w + dt * k3w, torque(t + dt));
    q += dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    w += dt / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    if (!w.allFinite() || w.cwiseAbs().maxCoeff() > kRateGuard) {
      throw InstabilityError("joint rates diverged at t = " + std::to_string(t + dt));
    }
    push((i + 1) * dt);
  }
  return result;
}

double tracking_error(const SimResult& sim, const Trajectory& reference) {
  if (sim.time.empty() || reference.empty()) {
    throw EmptyInputError("tracking_error needs non-empty inputs");
  }
  double worst = 0.0;
  std::size_t cursor = 0;
  for (const auto& ref : reference.samples()) {
    while (cursor + 1 < sim.time.size() && sim.time[cursor + 1] < ref.time) ++cursor;
    Eigen::Vector3d q;
    if (cursor + 1 >= sim.time.size()) {
      q = sim.angle.back();
    } else {
      const double t0 = sim.time[cursor], t1 = sim.time[cursor + 1];
      const double u = t1 > t0 ? std::clamp((ref.time - t0) / (t1 - t0), 0.0, 1.0) : 0.0;
      q = (1.0 - u) * sim.angle[cursor] + u * sim.angle[cursor + 1];
    }
    worst = std::max(worst, (q - ref.angle).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace legopt
