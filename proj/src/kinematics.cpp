#include "legopt/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace legopt {

FootPosition forward_kinematics(const LegGeometry& geom, const Eigen::Vector3d& angles,
                                double base_height) {
  validate(geom);
  const double l1 = geom.coxa.length;
  const double l2 = geom.femur.length;
  const double l3 = geom.tibia.length;
  const double knee = angles[2] - angles[1];
  FootPosition fp;
  fp.radial = l1 + l2 * std::cos(angles[1]) + l3 * std::cos(knee);
  fp.vertical = base_height + l2 * std::sin(angles[1]) - l3 * std::sin(knee);
  fp.azimuth = angles[0];
  fp.cartesian = Eigen::Vector3d(fp.radial * std::cos(angles[0]),
                                 fp.radial * std::sin(angles[0]), fp.vertical);
  return fp;
}

double max_reach(const LegGeometry& geom, const Trajectory& traj) {
  if (traj.empty()) {
    throw EmptyInputError("max_reach needs a non-empty trajectory");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& s : traj.samples()) {
    best = std::max(best, forward_kinematics(geom, s.angle).radial);
  }
  return best;
}

}  // namespace legopt
