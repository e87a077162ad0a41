#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "legopt/dynamics.hpp"

namespace legopt {

/// Joint driving power series with the per-joint peaks.
struct PowerCurves {
  std::vector<double> time;
  std::vector<Eigen::Vector3d> power;
  Eigen::Vector3d peak = Eigen::Vector3d::Zero();  // max |P_i| over the trace
};

/// P_i(t) = tau_i(t) w_i(t) on the trace grid. Throws EmptyInputError.
PowerCurves power_curves(const TorqueTrace& trace);

/// Generalized inertia matrix recovered numerically from the inverse-dynamics
/// function: column k = inverse_dynamics(theta, w=0, qdd=e_k, gravity off)
/// minus the same call with qdd = 0. Exercises exactly the code under test.
Eigen::Matrix3d extract_mass_matrix(const DynamicsParams& p, const Eigen::Vector3d& angle);

/// Forward-integrated trajectory under a prescribed torque profile.
struct SimResult {
  std::vector<double> time;
  std::vector<Eigen::Vector3d> angle;
  std::vector<Eigen::Vector3d> velocity;
  std::vector<Eigen::Vector3d> power;              // applied torque times simulated rate
  Eigen::Vector3d peak_power = Eigen::Vector3d::Zero();
};

using TorqueProfile = std::function<Eigen::Vector3d(double)>;

/// Integrates qdd = M(theta)^{-1} (tau - bias(theta, w)) with classical
/// fourth-order fixed-step Runge-Kutta; bias is inverse_dynamics at qdd = 0.
/// M is checked symmetric positive definite at every step (SingularInertiaError
/// otherwise); rates beyond 1e3 rad/s raise InstabilityError.
SimResult forward_simulate(const DynamicsParams& p, const TorqueProfile& torque,
                           const JointState& initial, double duration, double dt);

/// Max per-joint angle deviation between a simulated run and reference samples
/// on the reference grid (simulated states interpolated linearly in time).
double tracking_error(const SimResult& sim, const Trajectory& reference);

}  // namespace legopt
