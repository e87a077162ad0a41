#include "legopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace legopt {

namespace {

std::string dims_str(const SegmentDims& d) {
  return "l=" + std::to_string(d.length) + " w=" + std::to_string(d.width) +
         " h=" + std::to_string(d.height) + " t=" + std::to_string(d.wall_thickness);
}

}  // namespace

void validate(const SegmentDims& dims) {
  if (!(dims.length > 0.0) || !(dims.width > 0.0) || !(dims.height > 0.0)) {
    throw InvalidDimensionsError("segment dimensions must be positive: " + dims_str(dims));
  }
  const double t_max = 0.5 * std::min(dims.width, dims.height);
  if (!(dims.wall_thickness > 0.0) || dims.wall_thickness > t_max) {
    throw InvalidDimensionsError("wall thickness outside (0, min(w,h)/2]: " + dims_str(dims));
  }
}

const SegmentDims& LegGeometry::segment(int i) const {
  switch (i) {
    case 0: return coxa;
    case 1: return femur;
    default: return tibia;
  }
}

SegmentDims& LegGeometry::segment(int i) {
  switch (i) {
    case 0: return coxa;
    case 1: return femur;
    default: return tibia;
  }
}

void validate(const LegGeometry& geom) {
  validate(geom.coxa);
  validate(geom.femur);
  validate(geom.tibia);
}

void validate(const MaterialParams& mat) {
  if (!(mat.density > 0.0) || !(mat.elastic_modulus > 0.0) || !(mat.gravity > 0.0) ||
      mat.base_height < 0.0) {
    throw InvalidDimensionsError("material parameters out of range");
  }
}

double cross_section_area(const SegmentDims& dims) {
  validate(dims);
  const double inner_h = std::max(dims.height - 2.0 * dims.wall_thickness, 0.0);
  const double inner_w = std::max(dims.width - 2.0 * dims.wall_thickness, 0.0);
  return dims.height * dims.width - inner_h * inner_w;
}

SegmentProperties segment_properties(const SegmentDims& dims, const MaterialParams& mat) {
  validate(mat);
  const double area = cross_section_area(dims);
  SegmentProperties props;
  props.mass = mat.density * dims.length * area;
  props.com_offset = 0.5 * dims.length;
  props.inertia = props.mass * dims.length * dims.length / 12.0;
  const double inner_h = std::max(dims.height - 2.0 * dims.wall_thickness, 0.0);
  const double inner_w = std::max(dims.width - 2.0 * dims.wall_thickness, 0.0);
  props.bending_stiffness = mat.elastic_modulus *
      (dims.height * std::pow(dims.width, 3) - inner_h * std::pow(inner_w, 3)) / 12.0;
  return props;
}

double calibrate_wall_thickness(double length, double height, double width,
                                double target_mass, double density) {
  if (!(length > 0.0) || !(height > 0.0) || !(width > 0.0) || !(density > 0.0)) {
    throw InvalidDimensionsError("calibration needs positive length, section and density");
  }
  if (!(target_mass > 0.0)) {
    throw CalibrationInfeasibleError("target mass must be positive");
  }
  const double solid_mass = density * length * height * width;
  if (target_mass >= solid_mass) {
    throw CalibrationInfeasibleError("target mass " + std::to_string(target_mass) +
                                     " kg exceeds the solid-section mass " +
                                     std::to_string(solid_mass) + " kg");
  }
  // (h-2t)(w-2t) = h w - m/(rho l)  =>  4t^2 - 2(h+w)t + m/(rho l) = 0
  const double target_area = target_mass / (density * length);
  const double b = -2.0 * (height + width);
  const double disc = b * b - 16.0 * target_area;
  if (disc < 0.0) {
    throw CalibrationInfeasibleError("no real wall thickness reproduces the target mass");
  }
  // smaller positive root; the larger root would put the inner rectangle
  // outside the section
  const double t = (-b - std::sqrt(disc)) / 8.0;
  const double t_max = 0.5 * std::min(width, height);
  if (!(t > 0.0) || t > t_max) {
    throw CalibrationInfeasibleError("calibrated thickness " + std::to_string(t) +
                                     " m outside (0, min(w,h)/2]");
  }
  return t;
}

}  // namespace legopt
