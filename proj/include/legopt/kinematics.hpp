#pragma once

#include <Eigen/Core>

#include "legopt/geometry.hpp"
#include "legopt/trajectory.hpp"

namespace legopt {

/// Foot position in leg polar form (radial distance from the root-joint axis,
/// vertical height, yaw azimuth) plus the cartesian equivalent.
struct FootPosition {
  double radial = 0.0;    // m
  double vertical = 0.0;  // m
  double azimuth = 0.0;   // rad (= theta1)
  Eigen::Vector3d cartesian = Eigen::Vector3d::Zero();
};

/// r = l1 + l2 cos(theta2) + l3 cos(theta3 - theta2),
/// z = h0 + l2 sin(theta2) - l3 sin(theta3 - theta2),
/// x = r cos(theta1), y = r sin(theta1).
FootPosition forward_kinematics(const LegGeometry& geom, const Eigen::Vector3d& angles,
                                double base_height = 0.0);

/// Farthest foot placement distance: max radial reach over the samples.
/// Throws EmptyInputError for an empty trajectory.
double max_reach(const LegGeometry& geom, const Trajectory& traj);

}  // namespace legopt
