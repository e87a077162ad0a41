#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "legopt/geometry.hpp"
#include "legopt/trajectory.hpp"

namespace legopt {

/// Joint-space state (root yaw, hip pitch, knee pitch).
struct JointState {
  Eigen::Vector3d angle = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d acceleration = Eigen::Vector3d::Zero();
};

/// Everything the closed-form dynamics needs: per-segment rigid-body
/// properties, segment lengths and the gravity constants.
struct DynamicsParams {
  std::array<SegmentProperties, 3> segment;  // coxa, femur, tibia
  Eigen::Vector3d length = Eigen::Vector3d::Zero();
  double gravity = 9.8066;
  double base_height = 0.0;
};

DynamicsParams make_dynamics_params(const LegGeometry& geom, const MaterialParams& mat);

/// Total kinetic energy of the three segments.
///
/// Coxa:  1/2 m1 a1^2 w1^2 + 1/2 I1 w1^2
/// Femur: 1/2 m2 [(l1 + a2 c2)^2 w1^2 + a2^2 w2^2] + 1/2 I2 w2^2
/// Tibia: 1/2 m3 [(l1 + l2 c2 + a3 c32)^2 w1^2 + 2 l2 a3 w2 (w2 - w3) c3
///               + l2^2 w2^2 + a3^2 (w2 - w3)^2] + 1/2 I3 w3^2
/// with c2 = cos(theta2), c32 = cos(theta3 - theta2), c3 = cos(theta3).
/// The yaw motion of femur and tibia enters as a point mass at the COM; the
/// rod inertia terms act about the joint rates as written above.
double kinetic_energy(const DynamicsParams& p, const JointState& s);

/// m1 g h0 + m2 g (h0 + a2 sin(theta2)) + m3 g (h0 + l2 sin(theta2) - a3 sin(theta3 - theta2)).
double potential_energy(const DynamicsParams& p, const JointState& s);

/// Generalized inertia matrix M(theta) of the kinetic-energy quadratic form,
/// E_k = 1/2 w' M w. Symmetric; M12 = M13 = 0 for this chain.
Eigen::Matrix3d mass_matrix(const DynamicsParams& p, const Eigen::Vector3d& angle);

/// Gravity torque vector G(theta) = dE_p/dtheta.
Eigen::Vector3d gravity_torques(const DynamicsParams& p, const Eigen::Vector3d& angle);

/// Closed-form joint torques tau = d/dt(dEk/dw) - dEk/dtheta + dEp/dtheta,
/// assembled as M(theta) qdd + Mdot qd - 1/2 (qd' dM/dtheta_i qd)_i + G(theta).
/// Derived analytically from the energy expressions above.
Eigen::Vector3d inverse_dynamics(const DynamicsParams& p, const JointState& s);

/// Torques and instantaneous joint powers P_i = tau_i * w_i along a trajectory.
struct TorqueTrace {
  std::vector<double> time;
  std::vector<Eigen::Vector3d> torque;
  std::vector<Eigen::Vector3d> power;

  std::size_t size() const { return time.size(); }
  bool empty() const { return time.empty(); }
};

/// Throws EmptyInputError for an empty trajectory.
TorqueTrace torque_trace(const DynamicsParams& p, const Trajectory& traj);

}  // namespace legopt
