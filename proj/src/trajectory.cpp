#include "legopt/trajectory.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace legopt {

JointPoint QuinticSegment::eval(double t) const {
  if (t < 0.0 || t > duration_) {
    throw OutOfRangeError("evaluation time " + std::to_string(t) + " outside [0, " +
                          std::to_string(duration_) + "]");
  }
  const auto& c = coeffs_;
  JointPoint p;
  p.angle = ((((c[5] * t + c[4]) * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0];
  p.velocity = (((5.0 * c[5] * t + 4.0 * c[4]) * t + 3.0 * c[3]) * t + 2.0 * c[2]) * t + c[1];
  p.acceleration = ((20.0 * c[5] * t + 12.0 * c[4]) * t + 6.0 * c[3]) * t + 2.0 * c[2];
  return p;
}

QuinticSegment solve_quintic(const BoundaryConditions& bc) {
  if (!(bc.duration > 0.0)) {
    throw InvalidDurationError("segment duration must be positive, got " +
                               std::to_string(bc.duration));
  }
  const double T = bc.duration;
  const double T2 = T * T;
  const double dq = bc.end_angle - bc.start_angle;
  QuinticSegment::Coefficients c;
  c[0] = bc.start_angle;
  c[1] = bc.start_velocity;
  c[2] = 0.5 * bc.start_acceleration;
  c[3] = (20.0 * dq - (8.0 * bc.end_velocity + 12.0 * bc.start_velocity) * T -
          (3.0 * bc.start_acceleration - bc.end_acceleration) * T2) /
         (2.0 * T * T2);
  c[4] = (-30.0 * dq + (14.0 * bc.end_velocity + 16.0 * bc.start_velocity) * T +
          (3.0 * bc.start_acceleration - 2.0 * bc.end_acceleration) * T2) /
         (2.0 * T2 * T2);
  c[5] = (12.0 * dq - 6.0 * (bc.end_velocity + bc.start_velocity) * T -
          (bc.start_acceleration - bc.end_acceleration) * T2) /
         (2.0 * T2 * T2 * T);
  return QuinticSegment(c, T);
}

Trajectory::Trajectory(std::vector<TrajectorySample> samples,
                       std::vector<double> phase_boundaries)
    : samples_(std::move(samples)), phase_boundaries_(std::move(phase_boundaries)) {
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i].time > samples_[i - 1].time)) {
      throw InvalidDurationError("trajectory samples must be strictly increasing in time");
    }
  }
}

SwingWaypoints default_waypoints() {
  const double pi = M_PI;
  SwingWaypoints wp;
  wp.start.angle = Eigen::Vector3d(-pi / 4, -pi / 4, -pi / 4);
  wp.mid.angle = Eigen::Vector3d(0.0, pi / 4, -3 * pi / 4);
  wp.end.angle = Eigen::Vector3d(pi / 4, -pi / 4, -pi / 4);
  wp.mid.velocity = Eigen::Vector3d(pi / 2, 0.0, 0.0);
  return wp;
}

SwingPlan::SwingPlan(std::array<QuinticSegment, 3> first, std::array<QuinticSegment, 3> second,
                     double phase_time)
    : first_(std::move(first)), second_(std::move(second)), phase_time_(phase_time) {}

TrajectorySample SwingPlan::at(double t) const {
  if (t < 0.0 || t > total_time()) {
    throw OutOfRangeError("plan time " + std::to_string(t) + " outside [0, " +
                          std::to_string(total_time()) + "]");
  }
  const bool second = t > phase_time_;
  const double local = second ? t - phase_time_ : t;
  const auto& segs = second ? second_ : first_;
  TrajectorySample s;
  s.time = t;
  for (int j = 0; j < 3; ++j) {
    const JointPoint p = segs[j].eval(local);
    s.angle[j] = p.angle;
    s.velocity[j] = p.velocity;
    s.acceleration[j] = p.acceleration;
  }
  return s;
}

SwingPlan make_swing_plan(const SwingWaypoints& wp, double total_time) {
  if (!(total_time > 0.0)) {
    throw InvalidDurationError("total swing time must be positive");
  }
  const double T = 0.5 * total_time;
  std::array<QuinticSegment, 3> first;
  std::array<QuinticSegment, 3> second;
  for (int j = 0; j < 3; ++j) {
    first[j] = solve_quintic({wp.start.angle[j], wp.start.velocity[j], wp.start.acceleration[j],
                              wp.mid.angle[j], wp.mid.velocity[j], wp.mid.acceleration[j], T});
    second[j] = solve_quintic({wp.mid.angle[j], wp.mid.velocity[j], wp.mid.acceleration[j],
                               wp.end.angle[j], wp.end.velocity[j], wp.end.acceleration[j], T});
  }
  return SwingPlan(first, second, T);
}

Trajectory discretize(const SwingPlan& plan, const SwingWaypoints& waypoints,
                      int samples_per_phase) {
  if (samples_per_phase < 1) {
    throw InvalidDurationError("samples_per_phase must be >= 1");
  }
  const int n = samples_per_phase;
  const double T = plan.phase_time();
  std::vector<TrajectorySample> samples;
  samples.reserve(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    samples.push_back(plan.at(T * i / n));
  }
  // the join carries the mid waypoint exactly
  TrajectorySample mid;
  mid.time = T;
  mid.angle = waypoints.mid.angle;
  mid.velocity = waypoints.mid.velocity;
  mid.acceleration = waypoints.mid.acceleration;
  samples.push_back(mid);
  for (int i = 1; i < n; ++i) {
    samples.push_back(plan.at(T + T * i / n));
  }
  TrajectorySample end;
  end.time = 2.0 * T;
  end.angle = waypoints.end.angle;
  end.velocity = waypoints.end.velocity;
  end.acceleration = waypoints.end.acceleration;
  samples.push_back(end);
  return Trajectory(std::move(samples), {T});
}

Trajectory plan_swing(const SwingWaypoints& waypoints, double total_time,
                      int samples_per_phase) {
  return discretize(make_swing_plan(waypoints, total_time), waypoints, samples_per_phase);
}

}  // namespace legopt
