#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "legopt/errors.hpp"

namespace legopt {

/// Six boundary constraints of one joint-space segment plus its duration.
struct BoundaryConditions {
  double start_angle = 0.0;
  double start_velocity = 0.0;
  double start_acceleration = 0.0;
  double end_angle = 0.0;
  double end_velocity = 0.0;
  double end_acceleration = 0.0;
  double duration = 0.0;
};

/// Angle, rate and acceleration of one joint at one instant.
struct JointPoint {
  double angle = 0.0;
  double velocity = 0.0;
  double acceleration = 0.0;
};

/// theta(t) = c0 + c1 t + ... + c5 t^5 on local time t in [0, duration].
class QuinticSegment {
 public:
  using Coefficients = Eigen::Matrix<double, 6, 1>;

  QuinticSegment() = default;
  QuinticSegment(const Coefficients& coeffs, double duration)
      : coeffs_(coeffs), duration_(duration) {}

  const Coefficients& coefficients() const { return coeffs_; }
  double duration() const { return duration_; }

  /// Polynomial and first two derivatives at local time t.
  /// Throws OutOfRangeError for t outside [0, duration].
  JointPoint eval(double t) const;

 private:
  Coefficients coeffs_ = Coefficients::Zero();
  double duration_ = 0.0;
};

/// Unique quintic through the six boundary conditions (closed-form 6x6 solve).
QuinticSegment solve_quintic(const BoundaryConditions& bc);

/// Joint angles, velocities and accelerations of all three joints at one time.
struct TrajectorySample {
  double time = 0.0;
  Eigen::Vector3d angle = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d acceleration = Eigen::Vector3d::Zero();
};

/// Discretized swing, strictly increasing in time; phase_boundaries holds the
/// global times of the segment joins (the mid waypoint).
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(std::vector<TrajectorySample> samples, std::vector<double> phase_boundaries);

  const std::vector<TrajectorySample>& samples() const { return samples_; }
  const std::vector<double>& phase_boundaries() const { return phase_boundaries_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration() const { return samples_.empty() ? 0.0 : samples_.back().time; }

 private:
  std::vector<TrajectorySample> samples_;
  std::vector<double> phase_boundaries_;
};

/// Per-joint angle/velocity/acceleration at one waypoint.
struct Waypoint {
  Eigen::Vector3d angle = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d acceleration = Eigen::Vector3d::Zero();
};

/// start -> mid -> end triples for the two-segment swing.
struct SwingWaypoints {
  Waypoint start;
  Waypoint mid;
  Waypoint end;
};

/// Shipped default profile: angles (-pi/4,-pi/4,-pi/4) -> (0,pi/4,-3pi/4) ->
/// (pi/4,-pi/4,-pi/4), mid velocity (pi/2,0,0), all other rates zero.
SwingWaypoints default_waypoints();

/// Two quintic segments per joint with continuous value/rate/acceleration at
/// the join. Segment-local time starts at 0 in each phase.
class SwingPlan {
 public:
  SwingPlan() = default;
  SwingPlan(std::array<QuinticSegment, 3> first, std::array<QuinticSegment, 3> second,
            double phase_time);

  double phase_time() const { return phase_time_; }
  double total_time() const { return 2.0 * phase_time_; }

  /// State at global time t in [0, total_time].
  TrajectorySample at(double t) const;

  const std::array<QuinticSegment, 3>& first_phase() const { return first_; }
  const std::array<QuinticSegment, 3>& second_phase() const { return second_; }

 private:
  std::array<QuinticSegment, 3> first_;
  std::array<QuinticSegment, 3> second_;
  double phase_time_ = 0.0;
};

/// Builds the two-phase plan; total time is split equally between the phases.
SwingPlan make_swing_plan(const SwingWaypoints& waypoints, double total_time);

/// Uniform discretization with samples_per_phase intervals per phase
/// (2N+1 samples including the shared midpoint, which carries the mid
/// waypoint values exactly).
Trajectory discretize(const SwingPlan& plan, const SwingWaypoints& waypoints,
                      int samples_per_phase);

/// make_swing_plan + discretize in one call.
Trajectory plan_swing(const SwingWaypoints& waypoints, double total_time,
                      int samples_per_phase = 100);

}  // namespace legopt
