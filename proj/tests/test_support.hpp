#pragma once

#include <random>

#include "legopt/config.hpp"
#include "legopt/geometry.hpp"

namespace legopt::test {

// Initial design (lengths and outer sections in meters, masses in kg).
inline constexpr double kInitLength[3] = {0.140, 0.460, 0.460};
inline constexpr double kInitHeight[3] = {0.179, 0.158, 0.144};
inline constexpr double kInitWidth[3] = {0.121, 0.183, 0.117};
inline constexpr double kInitMass[3] = {6.06, 20.09, 14.22};

// Optimized reference design used for cross-checks.
inline constexpr double kOptLength[3] = {0.127, 0.428, 0.446};
inline constexpr double kOptHeight[3] = {0.173, 0.151, 0.130};
inline constexpr double kOptWidth[3] = {0.115, 0.169, 0.113};
inline constexpr double kOptMass[3] = {5.20, 17.17, 11.61};

inline MaterialParams default_material() { return MaterialParams{}; }

// Wall thicknesses calibrated from the initial masses.
inline Eigen::Vector3d calibrated_thickness() {
  const MaterialParams mat = default_material();
  Eigen::Vector3d t;
  for (int i = 0; i < 3; ++i) {
    t[i] = calibrate_wall_thickness(kInitLength[i], kInitHeight[i], kInitWidth[i],
                                    kInitMass[i], mat.density);
  }
  return t;
}

inline LegGeometry initial_geometry() {
  const Eigen::Vector3d t = calibrated_thickness();
  LegGeometry geom;
  for (int i = 0; i < 3; ++i) {
    geom.segment(i) = SegmentDims{kInitLength[i], kInitWidth[i], kInitHeight[i], t[i]};
  }
  return geom;
}

// Optimized reference dimensions with the calibrated (initial) thicknesses.
inline LegGeometry optimized_geometry() {
  const Eigen::Vector3d t = calibrated_thickness();
  LegGeometry geom;
  for (int i = 0; i < 3; ++i) {
    geom.segment(i) = SegmentDims{kOptLength[i], kOptWidth[i], kOptHeight[i], t[i]};
  }
  return geom;
}

class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}
  double operator()(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace legopt::test
