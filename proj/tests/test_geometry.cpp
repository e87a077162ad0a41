#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "legopt/geometry.hpp"
#include "test_support.hpp"

using namespace legopt;
using namespace legopt::test;

TEST_CASE("cross-section area of a solid section equals h*w") {
  // w - 2t = 0: the inner rectangle vanishes
  const SegmentDims solid{1.0, 0.1, 0.2, 0.05};
  CHECK(cross_section_area(solid) == doctest::Approx(0.02).epsilon(1e-15));
}

TEST_CASE("calibrated sections reproduce the configured masses") {
  const MaterialParams mat = default_material();
  for (int i = 0; i < 3; ++i) {
    const double t = calibrate_wall_thickness(kInitLength[i], kInitHeight[i], kInitWidth[i],
                                              kInitMass[i], mat.density);
    const SegmentDims dims{kInitLength[i], kInitWidth[i], kInitHeight[i], t};
    const double area = cross_section_area(dims);
    CHECK(area == doctest::Approx(kInitMass[i] / (mat.density * kInitLength[i])).epsilon(1e-12));
    const SegmentProperties props = segment_properties(dims, mat);
    CHECK(std::abs(props.mass - kInitMass[i]) / kInitMass[i] < 1e-9);  // round trip
  }
}

TEST_CASE("calibrated thicknesses match the independently computed roots") {
  const Eigen::Vector3d t = calibrated_thickness();
  CHECK(t[0] == doctest::Approx(0.03354704972952022).epsilon(1e-12));
  CHECK(t[1] == doctest::Approx(0.02757961247608091).epsilon(1e-12));
  CHECK(t[2] == doctest::Approx(0.02694103725613611).epsilon(1e-12));
  // bisection on the monotone inner-area relation as an independent route
  const MaterialParams mat = default_material();
  for (int i = 0; i < 3; ++i) {
    const double target = kInitMass[i] / (mat.density * kInitLength[i]);
    double lo = 0.0, hi = 0.5 * std::min(kInitWidth[i], kInitHeight[i]);
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      const double area = kInitHeight[i] * kInitWidth[i] -
                          (kInitHeight[i] - 2 * mid) * (kInitWidth[i] - 2 * mid);
      (area < target ? lo : hi) = mid;
    }
    CHECK(t[i] == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
  }
}

TEST_CASE("segment properties: unit-length solid square") {
  const MaterialParams mat = default_material();
  const SegmentDims dims{1.0, 0.08, 0.08, 0.04};  // solid: w = h = 2t
  const SegmentProperties props = segment_properties(dims, mat);
  CHECK(props.mass == doctest::Approx(mat.density * 0.08 * 0.08).epsilon(1e-15));
  CHECK(props.inertia == doctest::Approx(props.mass / 12.0).epsilon(1e-15));
  CHECK(props.com_offset == 0.5);
  CHECK(props.bending_stiffness ==
        doctest::Approx(mat.elastic_modulus * 0.08 * std::pow(0.08, 3) / 12.0).epsilon(1e-15));
}

TEST_CASE("initial thicknesses predict the optimized reference masses within 2-10%") {
  const MaterialParams mat = default_material();
  const LegGeometry opt = optimized_geometry();
  const double rel_bounds[3] = {0.02, 0.02, 0.10};  // tibia carries the known residual
  for (int i = 0; i < 3; ++i) {
    const double mass = segment_properties(opt.segment(i), mat).mass;
    CHECK(std::abs(mass - kOptMass[i]) / kOptMass[i] < rel_bounds[i]);
  }
}

TEST_CASE("invalid dimensions are rejected") {
  CHECK_THROWS_AS(cross_section_area({0.0, 0.1, 0.1, 0.01}), InvalidDimensionsError);
  CHECK_THROWS_AS(cross_section_area({0.1, -0.1, 0.1, 0.01}), InvalidDimensionsError);
  CHECK_THROWS_AS(cross_section_area({0.1, 0.1, 0.1, 0.0}), InvalidDimensionsError);
  // t beyond min(w,h)/2
  CHECK_THROWS_AS(cross_section_area({0.1, 0.1, 0.2, 0.06}), InvalidDimensionsError);
  CHECK_THROWS_AS(segment_properties({0.1, 0.1, 0.2, 0.06}, default_material()),
                  InvalidDimensionsError);
}

TEST_CASE("calibration rejects unreachable masses") {
  const double rho = 2770.0;
  CHECK_THROWS_AS(calibrate_wall_thickness(0.1, 0.1, 0.1, 0.0, rho),
                  CalibrationInfeasibleError);
  // heavier than the solid section
  CHECK_THROWS_AS(calibrate_wall_thickness(0.1, 0.1, 0.1, rho * 0.1 * 0.1 * 0.1 * 1.01, rho),
                  CalibrationInfeasibleError);
}

TEST_CASE("near-solid target selects the smaller root inside the section") {
  const double rho = 2770.0;
  const double l = 0.2, h = 0.15, w = 0.1;
  const double target = rho * l * h * w * (1.0 - 1e-4);
  const double t = calibrate_wall_thickness(l, h, w, target, rho);
  CHECK(t > 0.0);
  CHECK(t <= 0.5 * w);
  const SegmentProperties props = segment_properties({l, w, h, t}, default_material());
  CHECK(std::abs(props.mass - target) / target < 1e-9);
}

TEST_CASE("mass and stiffness increase strictly with wall thickness") {
  const MaterialParams mat = default_material();
  double prev_mass = 0.0, prev_ei = 0.0;
  for (double t = 0.005; t < 0.05; t += 0.005) {
    const SegmentProperties props = segment_properties({0.3, 0.1, 0.15, t}, mat);
    CHECK(props.mass > prev_mass);
    CHECK(props.bending_stiffness > prev_ei);
    prev_mass = props.mass;
    prev_ei = props.bending_stiffness;
  }
}

TEST_CASE("solid limit of the bending stiffness") {
  const MaterialParams mat = default_material();
  const SegmentProperties props = segment_properties({0.3, 0.1, 0.15, 0.05}, mat);
  CHECK(props.bending_stiffness ==
        doctest::Approx(mat.elastic_modulus * 0.15 * std::pow(0.1, 3) / 12.0).epsilon(1e-12));
}

TEST_CASE("doubling the length doubles the mass and keeps the area") {
  const MaterialParams mat = default_material();
  const SegmentDims base{0.25, 0.12, 0.16, 0.02};
  SegmentDims doubled = base;
  doubled.length *= 2.0;
  CHECK(cross_section_area(doubled) == cross_section_area(base));
  CHECK(segment_properties(doubled, mat).mass ==
        doctest::Approx(2.0 * segment_properties(base, mat).mass).epsilon(1e-15));
}
