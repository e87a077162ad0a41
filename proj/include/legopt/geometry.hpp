#pragma once

#include <Eigen/Core>

#include "legopt/errors.hpp"

namespace legopt {

/// Hollow rectangular rod: length, outer cross-section and wall thickness, in meters.
/// wall_thickness == min(width, height)/2 denotes a solid section.
struct SegmentDims {
  double length = 0.0;
  double width = 0.0;
  double height = 0.0;
  double wall_thickness = 0.0;
};

/// Throws InvalidDimensionsError unless l,w,h > 0 and 0 < t <= min(w,h)/2.
void validate(const SegmentDims& dims);

/// The three leg segments, body outward.
struct LegGeometry {
  SegmentDims coxa;
  SegmentDims femur;
  SegmentDims tibia;

  const SegmentDims& segment(int i) const;
  SegmentDims& segment(int i);
};

void validate(const LegGeometry& geom);

/// Material and environment constants. base_height is the distance of the
/// coxa center of mass to the zero-potential plane; it cancels in all torques.
struct MaterialParams {
  double density = 2770.0;           // kg/m^3 (2.77 g/cm^3 aluminium alloy)
  double elastic_modulus = 68.9e9;   // Pa (6061 alloy)
  double gravity = 9.8066;           // m/s^2
  double base_height = 0.0;          // m
};

void validate(const MaterialParams& mat);

/// Derived rigid-body properties of one segment, uniform-rod model.
struct SegmentProperties {
  double mass = 0.0;               // kg
  double com_offset = 0.0;         // m, from the proximal joint (= length/2)
  double inertia = 0.0;            // kg m^2, about the COM axis perpendicular to the rod
  double bending_stiffness = 0.0;  // N m^2, E*Iz of the hollow rectangle
};

/// Outer area minus inner area, h*w - (h-2t)(w-2t). Equals h*w for a solid section.
double cross_section_area(const SegmentDims& dims);

/// mass = rho*l*A, com at l/2, I = m*l^2/12, EIz = E*(h*w^3 - (h-2t)(w-2t)^3)/12.
SegmentProperties segment_properties(const SegmentDims& dims, const MaterialParams& mat);

/// Solves (h-2t)(w-2t) = h*w - m/(rho*l) for the wall thickness that gives a
/// hollow section of the requested mass, i.e. the smaller positive root of
/// 4t^2 - 2(h+w)t + m/(rho*l) = 0. Throws CalibrationInfeasibleError when the
/// mass is not reachable with 0 < t <= min(w,h)/2.
double calibrate_wall_thickness(double length, double height, double width,
                                double target_mass, double density);

}  // namespace legopt
