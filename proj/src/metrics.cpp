#include "legopt/metrics.hpp"

#include <cmath>

namespace legopt {

Eigen::Vector3d peak_torque(const TorqueTrace& trace) {
  if (trace.empty()) {
    throw EmptyInputError("peak_torque needs a non-empty trace");
  }
  Eigen::Vector3d peak = Eigen::Vector3d::Zero();
  for (const auto& tau : trace.torque) {
    peak = peak.cwiseMax(tau.cwiseAbs());
  }
  return peak;
}

Eigen::Vector3d joint_energy(const TorqueTrace& trace, const Trajectory& traj,
                             EnergyMode mode) {
  const auto& samples = traj.samples();
  if (trace.size() != samples.size()) {
    throw AlignmentError("trace and trajectory sample counts differ");
  }
  Eigen::Vector3d q = Eigen::Vector3d::Zero();
  for (std::size_t j = 1; j < samples.size(); ++j) {
    if (trace.time[j] != samples[j].time) {
      throw AlignmentError("trace and trajectory time grids differ");
    }
    const double dt = samples[j].time - samples[j - 1].time;
    const Eigen::Vector3d p = trace.torque[j].cwiseProduct(samples[j].velocity);
    q += (mode == EnergyMode::kAbsolute ? p.cwiseAbs().eval() : p) * dt;
  }
  return q;
}

MetricValues evaluate(const LegGeometry& geom, const Trajectory& traj,
                      const MaterialParams& mat, EnergyMode mode) {
  const DynamicsParams params = make_dynamics_params(geom, mat);
  const TorqueTrace trace = torque_trace(params, traj);
  MetricValues values;
  values.peak_torque = peak_torque(trace);
  values.joint_energy = joint_energy(trace, traj, mode);
  values.reach = max_reach(geom, traj);
  for (int i = 0; i < 3; ++i) {
    values.bending_stiffness[i] = segment_properties(geom.segment(i), mat).bending_stiffness;
  }
  return values;
}

}  // namespace legopt
