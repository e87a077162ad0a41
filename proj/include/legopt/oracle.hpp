#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "legopt/dynamics.hpp"

namespace legopt {

/// Finite-difference steps and acceptance tolerance for the numerical checks.
struct OracleConfig {
  double angle_step = 1e-6;  // rad, central-difference step in the joint angles
  double time_step = 1e-6;   // s, step of the path-advance d/dt cross-check
  double tolerance = 1e-6;   // relative error bound for pass/fail decisions
};

void validate(const OracleConfig& cfg);

/// Torques recovered purely from the energy functions, plus a flag raised when
/// the difference steps are inside the cancellation floor for the requested
/// tolerance (the result is then reported, not trusted).
struct FdTorques {
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();
  bool low_confidence = false;
};

/// Evaluates tau_i = d/dt(dEk/dw_i) - dEk/dtheta_i + dEp/dtheta_i by central
/// differences of kinetic_energy/potential_energy only — it never touches the
/// closed-form torque path.
///
/// The d/dt term uses the chain rule over (theta, w) advanced along (w, qdd):
/// d/dt dEk/dw_i = sum_j d2Ek/dw_i dtheta_j * w_j + sum_j d2Ek/dw_i dw_j * qdd_j.
/// Velocity-direction derivatives use unit steps (exact for the quadratic
/// energy); angle-direction derivatives use cfg.angle_step. A second estimate
/// of the d/dt term, central-differenced along the constant-acceleration path
/// with cfg.time_step, feeds the low-confidence detection.
FdTorques fd_torques(const DynamicsParams& p, const JointState& s, const OracleConfig& cfg);

/// Result of comparing closed-form and finite-difference torques over random
/// states. The per-state error metric is
///   |tau_fd - tau_cf|_inf / max(|tau_cf|_inf, |tau_fd|_inf, 1 N m),
/// which bounds the absolute error by the tolerance near zero torque.
struct SweepReport {
  int states = 0;
  double max_error = 0.0;
  double mean_error = 0.0;
  int low_confidence_count = 0;
  bool pass = false;
};

/// Seeded sweep over uniformly random states, theta in [-pi,pi]^3,
/// w in [-10,10]^3, qdd in [-50,50]^3.
SweepReport torque_sweep(const DynamicsParams& p, int states, std::uint64_t seed,
                         const OracleConfig& cfg);

/// Per-sample residual |sum_i tau_i w_i - d(Ek+Ep)/dt| with the energy
/// derivative taken by second-order differences on the sample grid (central in
/// the interior, one-sided three-point at the ends). The residual therefore
/// carries the O(dt^2) truncation of the grid, shrinking ~4x when the sample
/// count doubles.
struct PowerBalanceReport {
  double max_residual = 0.0;  // W
  double rms_residual = 0.0;  // W
  std::size_t samples = 0;
};

/// Throws AlignmentError when trace and trajectory grids differ,
/// EmptyInputError when there are fewer than three samples.
PowerBalanceReport check_power_balance(const TorqueTrace& trace, const Trajectory& traj,
                                       const DynamicsParams& p);

}  // namespace legopt
