#include "legopt/dynamics.hpp"

#include <cmath>

namespace legopt {

namespace {

// Trig terms shared by the energy and torque assembly.
struct Pose {
  double c2, s2;    // cos/sin(theta2)
  double c32, s32;  // cos/sin(theta3 - theta2)
  double c3, s3;    // cos/sin(theta3)
  double u2;        // l1 + a2 c2, yaw radius of the femur COM
  double u3;        // l1 + l2 c2 + a3 c32, yaw radius of the tibia COM
};

Pose make_pose(const DynamicsParams& p, const Eigen::Vector3d& angle) {
  Pose q;
  q.c2 = std::cos(angle[1]);
  q.s2 = std::sin(angle[1]);
  q.c32 = std::cos(angle[2] - angle[1]);
  q.s32 = std::sin(angle[2] - angle[1]);
  q.c3 = std::cos(angle[2]);
  q.s3 = std::sin(angle[2]);
  const double a2 = p.segment[1].com_offset;
  const double a3 = p.segment[2].com_offset;
  q.u2 = p.length[0] + a2 * q.c2;
  q.u3 = p.length[0] + p.length[1] * q.c2 + a3 * q.c32;
  return q;
}

// dM/dtheta2 and dM/dtheta3 (dM/dtheta1 vanishes: yaw is cyclic).
void mass_matrix_gradients(const DynamicsParams& p, const Pose& q, Eigen::Matrix3d& dM2,
                           Eigen::Matrix3d& dM3) {
  const double m2 = p.segment[1].mass;
  const double m3 = p.segment[2].mass;
  const double a2 = p.segment[1].com_offset;
  const double a3 = p.segment[2].com_offset;
  const double l2 = p.length[1];
  dM2.setZero();
  dM3.setZero();
  dM2(0, 0) = 2.0 * m2 * q.u2 * (-a2 * q.s2) + 2.0 * m3 * q.u3 * (-l2 * q.s2 + a3 * q.s32);
  dM3(0, 0) = 2.0 * m3 * q.u3 * (-a3 * q.s32);
  dM3(1, 1) = -2.0 * m3 * l2 * a3 * q.s3;
  dM3(1, 2) = dM3(2, 1) = m3 * l2 * a3 * q.s3;
}

}  // namespace

DynamicsParams make_dynamics_params(const LegGeometry& geom, const MaterialParams& mat) {
  DynamicsParams p;
  for (int i = 0; i < 3; ++i) {
    p.segment[i] = segment_properties(geom.segment(i), mat);
    p.length[i] = geom.segment(i).length;
  }
  p.gravity = mat.gravity;
  p.base_height = mat.base_height;
  return p;
}

double kinetic_energy(const DynamicsParams& p, const JointState& s) {
  const double m1 = p.segment[0].mass, a1 = p.segment[0].com_offset, I1 = p.segment[0].inertia;
  const double m2 = p.segment[1].mass, a2 = p.segment[1].com_offset, I2 = p.segment[1].inertia;
  const double m3 = p.segment[2].mass, a3 = p.segment[2].com_offset, I3 = p.segment[2].inertia;
  const double l2 = p.length[1];
  const Pose q = make_pose(p, s.angle);
  const double w1 = s.velocity[0], w2 = s.velocity[1], w3 = s.velocity[2];
  const double coxa = 0.5 * m1 * a1 * a1 * w1 * w1 + 0.5 * I1 * w1 * w1;
  const double femur =
      0.5 * m2 * (q.u2 * q.u2 * w1 * w1 + a2 * a2 * w2 * w2) + 0.5 * I2 * w2 * w2;
  const double tibia =
      0.5 * m3 *
          (q.u3 * q.u3 * w1 * w1 + 2.0 * l2 * a3 * w2 * (w2 - w3) * q.c3 + l2 * l2 * w2 * w2 +
           a3 * a3 * (w2 - w3) * (w2 - w3)) +
      0.5 * I3 * w3 * w3;
  return coxa + femur + tibia;
}

double potential_energy(const DynamicsParams& p, const JointState& s) {
  const double g = p.gravity, h0 = p.base_height;
  const double m1 = p.segment[0].mass;
  const double m2 = p.segment[1].mass, a2 = p.segment[1].com_offset;
  const double m3 = p.segment[2].mass, a3 = p.segment[2].com_offset;
  const double l2 = p.length[1];
  const double s2 = std::sin(s.angle[1]);
  const double s32 = std::sin(s.angle[2] - s.angle[1]);
  return m1 * g * h0 + m2 * g * (h0 + a2 * s2) + m3 * g * (h0 + l2 * s2 - a3 * s32);
}

Eigen::Matrix3d mass_matrix(const DynamicsParams& p, const Eigen::Vector3d& angle) {
  const double m1 = p.segment[0].mass, a1 = p.segment[0].com_offset, I1 = p.segment[0].inertia;
  const double m2 = p.segment[1].mass, a2 = p.segment[1].com_offset, I2 = p.segment[1].inertia;
  const double m3 = p.segment[2].mass, a3 = p.segment[2].com_offset, I3 = p.segment[2].inertia;
  const double l2 = p.length[1];
  const Pose q = make_pose(p, angle);
  Eigen::Matrix3d M = Eigen::Matrix3d::Zero();
  M(0, 0) = m1 * a1 * a1 + I1 + m2 * q.u2 * q.u2 + m3 * q.u3 * q.u3;
  M(1, 1) = m2 * a2 * a2 + I2 + m3 * (l2 * l2 + 2.0 * l2 * a3 * q.c3 + a3 * a3);
  M(2, 2) = m3 * a3 * a3 + I3;
  M(1, 2) = M(2, 1) = -m3 * a3 * (a3 + l2 * q.c3);
  return M;
}

Eigen::Vector3d gravity_torques(const DynamicsParams& p, const Eigen::Vector3d& angle) {
  const double g = p.gravity;
  const double m2 = p.segment[1].mass, a2 = p.segment[1].com_offset;
  const double m3 = p.segment[2].mass, a3 = p.segment[2].com_offset;
  const double l2 = p.length[1];
  const Pose q = make_pose(p, angle);
  return Eigen::Vector3d(0.0, g * (m2 * a2 * q.c2 + m3 * (l2 * q.c2 + a3 * q.c32)),
                         -g * m3 * a3 * q.c32);
}

Eigen::Vector3d inverse_dynamics(const DynamicsParams& p, const JointState& s) {
  const Pose q = make_pose(p, s.angle);
  const Eigen::Matrix3d M = mass_matrix(p, s.angle);
  Eigen::Matrix3d dM2, dM3;
  mass_matrix_gradients(p, q, dM2, dM3);
  const Eigen::Vector3d& w = s.velocity;
  const Eigen::Matrix3d Mdot = dM2 * w[1] + dM3 * w[2];
  const Eigen::Vector3d grad_ek(0.0, 0.5 * w.dot(dM2 * w), 0.5 * w.dot(dM3 * w));
  return M * s.acceleration + Mdot * w - grad_ek + gravity_torques(p, s.angle);
}

TorqueTrace torque_trace(const DynamicsParams& p, const Trajectory& traj) {
  if (traj.empty()) {
    throw EmptyInputError("torque_trace needs a non-empty trajectory");
  }
  TorqueTrace trace;
  trace.time.reserve(traj.size());
  trace.torque.reserve(traj.size());
  trace.power.reserve(traj.size());
  for (const auto& sample : traj.samples()) {
    const Eigen::Vector3d tau =
        inverse_dynamics(p, {sample.angle, sample.velocity, sample.acceleration});
    trace.time.push_back(sample.time);
    trace.torque.push_back(tau);
    trace.power.push_back(tau.cwiseProduct(sample.velocity));
  }
  return trace;
}

}  // namespace legopt
