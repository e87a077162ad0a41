#pragma once

#include <Eigen/Core>

#include "legopt/dynamics.hpp"
#include "legopt/geometry.hpp"
#include "legopt/kinematics.hpp"

namespace legopt {

/// Joint energy accumulation: absolute mechanical work sum |P| dt (default,
/// matches the strictly positive consumption figures) or the literal signed
/// sum P dt.
enum class EnergyMode { kAbsolute, kSigned };

/// The four quantities the optimizer scores a candidate geometry on.
struct MetricValues {
  Eigen::Vector3d peak_torque = Eigen::Vector3d::Zero();        // N m, per joint
  Eigen::Vector3d joint_energy = Eigen::Vector3d::Zero();       // J, per joint
  double reach = 0.0;                                           // m, farthest foot placement
  Eigen::Vector3d bending_stiffness = Eigen::Vector3d::Zero();  // N m^2, per segment
};

/// Metric values of the initial geometry, computed once and frozen; the
/// denominators of every ratio.
using Baseline = MetricValues;

/// Componentwise max |tau_i| over the trace. Throws EmptyInputError.
Eigen::Vector3d peak_torque(const TorqueTrace& trace);

/// Q_i = sum_j P_i^j (t_j - t_{j-1}) over samples j >= 1 (right-endpoint rule),
/// with |P| in absolute mode. Throws AlignmentError on mismatched grids.
Eigen::Vector3d joint_energy(const TorqueTrace& trace, const Trajectory& traj,
                             EnergyMode mode = EnergyMode::kAbsolute);

/// Full pipeline for one candidate: segment properties -> torque trace over the
/// shared trajectory -> peak torque, energy, reach and bending stiffness.
MetricValues evaluate(const LegGeometry& geom, const Trajectory& traj,
                      const MaterialParams& mat, EnergyMode mode = EnergyMode::kAbsolute);

}  // namespace legopt
