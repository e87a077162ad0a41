#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "legopt/trajectory.hpp"
#include "test_support.hpp"

using namespace legopt;

namespace {

constexpr double kPi = M_PI;

void check_coeffs(const QuinticSegment& seg, const double (&expect)[6]) {
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(seg.coefficients()[i] - expect[i]) < 1e-12);
  }
}

}  // namespace

TEST_CASE("quintic coefficients of the six default swing segments") {
  const SwingWaypoints wp = default_waypoints();
  const SwingPlan plan = make_swing_plan(wp, 2.0);
  // phase 1
  check_coeffs(plan.first_phase()[0], {-kPi / 4, 0, 0, kPi / 2, -kPi / 4, 0});
  check_coeffs(plan.first_phase()[1], {-kPi / 4, 0, 0, 5 * kPi, -7.5 * kPi, 3 * kPi});
  check_coeffs(plan.first_phase()[2], {-kPi / 4, 0, 0, -5 * kPi, 7.5 * kPi, -3 * kPi});
  // phase 2
  check_coeffs(plan.second_phase()[0], {0, kPi / 2, 0, -kPi / 2, kPi / 4, 0});
  check_coeffs(plan.second_phase()[1], {kPi / 4, 0, 0, -5 * kPi, 7.5 * kPi, -3 * kPi});
  check_coeffs(plan.second_phase()[2], {-3 * kPi / 4, 0, 0, 5 * kPi, -7.5 * kPi, 3 * kPi});
}

TEST_CASE("all-zero boundary conditions give the zero polynomial") {
  const QuinticSegment seg = solve_quintic({0, 0, 0, 0, 0, 0, 1.0});
  for (int i = 0; i < 6; ++i) CHECK(seg.coefficients()[i] == 0.0);
}

TEST_CASE("non-positive duration is rejected") {
  CHECK_THROWS_AS(solve_quintic({0, 0, 0, 1, 0, 0, 0.0}), InvalidDurationError);
  CHECK_THROWS_AS(solve_quintic({0, 0, 0, 1, 0, 0, -1.0}), InvalidDurationError);
}

TEST_CASE("evaluation anchors") {
  const QuinticSegment root1 = solve_quintic({-kPi / 4, 0, 0, 0, kPi / 2, 0, 1.0});
  const JointPoint end = root1.eval(1.0);
  CHECK(std::abs(end.angle - 0.0) < 1e-12);
  CHECK(std::abs(end.velocity - kPi / 2) < 1e-12);
  CHECK(std::abs(end.acceleration - 0.0) < 1e-12);

  const JointPoint start = root1.eval(0.0);
  CHECK(start.angle == -kPi / 4);
  CHECK(start.velocity == 0.0);
  CHECK(start.acceleration == 0.0);

  // knee phase 1 halfway: -pi/4 - 5pi/8 + 15pi/32 - 3pi/32 = -pi/2
  const QuinticSegment knee1 = solve_quintic({-kPi / 4, 0, 0, -3 * kPi / 4, 0, 0, 1.0});
  CHECK(std::abs(knee1.eval(0.5).angle - (-kPi / 2)) < 1e-12);
}

TEST_CASE("evaluation outside the segment is rejected") {
  const QuinticSegment seg = solve_quintic({0, 0, 0, 1, 0, 0, 1.0});
  CHECK_THROWS_AS(seg.eval(-0.01), OutOfRangeError);
  CHECK_THROWS_AS(seg.eval(1.01), OutOfRangeError);
}

TEST_CASE("random boundary conditions are reproduced") {
  test::UniformRng rng(917);
  for (int k = 0; k < 200; ++k) {
    BoundaryConditions bc;
    bc.start_angle = rng(-3, 3);
    bc.start_velocity = rng(-5, 5);
    bc.start_acceleration = rng(-20, 20);
    bc.end_angle = rng(-3, 3);
    bc.end_velocity = rng(-5, 5);
    bc.end_acceleration = rng(-20, 20);
    bc.duration = rng(0.3, 3.0);
    const QuinticSegment seg = solve_quintic(bc);
    const JointPoint a = seg.eval(0.0);
    const JointPoint b = seg.eval(bc.duration);
    CHECK(std::abs(a.angle - bc.start_angle) < 1e-9);
    CHECK(std::abs(a.velocity - bc.start_velocity) < 1e-9);
    CHECK(std::abs(a.acceleration - bc.start_acceleration) < 1e-9);
    CHECK(std::abs(b.angle - bc.end_angle) < 1e-9);
    CHECK(std::abs(b.velocity - bc.end_velocity) < 1e-9);
    CHECK(std::abs(b.acceleration - bc.end_acceleration) < 1e-9);
  }
}

TEST_CASE("default swing discretization") {
  const SwingWaypoints wp = default_waypoints();
  const Trajectory traj = plan_swing(wp, 2.0, 100);
  REQUIRE(traj.size() == 201);
  CHECK(traj.phase_boundaries().size() == 1);
  CHECK(traj.phase_boundaries()[0] == 1.0);

  // midpoint sample carries the waypoint exactly
  const TrajectorySample& mid = traj.samples()[100];
  CHECK(mid.time == 1.0);
  CHECK(mid.angle == wp.mid.angle);
  CHECK(mid.velocity == wp.mid.velocity);
  CHECK(mid.acceleration == wp.mid.acceleration);
  CHECK(mid.velocity[0] == kPi / 2);

  // pointwise match against the closed-form polynomials
  const SwingPlan plan = make_swing_plan(wp, 2.0);
  for (const auto& s : traj.samples()) {
    const TrajectorySample ref = plan.at(s.time);
    CHECK((s.angle - ref.angle).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.velocity - ref.velocity).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.acceleration - ref.acceleration).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("join continuity of the two phases") {
  const SwingWaypoints wp = default_waypoints();
  const SwingPlan plan = make_swing_plan(wp, 2.0);
  for (int j = 0; j < 3; ++j) {
    const JointPoint a = plan.first_phase()[j].eval(1.0);
    const JointPoint b = plan.second_phase()[j].eval(0.0);
    CHECK(std::abs(a.angle - b.angle) < 1e-9);
    CHECK(std::abs(a.velocity - b.velocity) < 1e-9);
    CHECK(std::abs(a.acceleration - b.acceleration) < 1e-9);
  }
}

TEST_CASE("root-joint first phase degenerates to a quartic") {
  const SwingPlan plan = make_swing_plan(default_waypoints(), 2.0);
  CHECK(std::abs(plan.first_phase()[0].coefficients()[5]) < 1e-13);
}

TEST_CASE("identical waypoints with zero rates give a constant trajectory") {
  SwingWaypoints wp;
  wp.start.angle = wp.mid.angle = wp.end.angle = Eigen::Vector3d(0.3, -0.2, 0.9);
  const Trajectory traj = plan_swing(wp, 2.0, 20);
  for (const auto& s : traj.samples()) {
    CHECK((s.angle - wp.start.angle).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.velocity.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.acceleration.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("finite differences of the angle samples track the velocities") {
  // O(dt^2) truncation with the swing's own jerk scale: ~5e-4 of the peak
  // rate at 100 samples per phase, shrinking ~4x at 200
  auto max_fd_error = [](int n) {
    const Trajectory traj = plan_swing(default_waypoints(), 2.0, n);
    const auto& s = traj.samples();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      const Eigen::Vector3d fd =
          (s[i + 1].angle - s[i - 1].angle) / (s[i + 1].time - s[i - 1].time);
      worst = std::max(worst, (fd - s[i].velocity).cwiseAbs().maxCoeff());
    }
    return worst;
  };
  const double peak_rate = 15.0 * kPi / 16.0;  // max hip rate
  const double e100 = max_fd_error(100);
  const double e200 = max_fd_error(200);
  CHECK(e100 / peak_rate < 1e-3);
  CHECK(e100 / e200 > 3.0);
  CHECK(e100 / e200 < 5.0);
}

TEST_CASE("monotone time and invalid sample ordering") {
  std::vector<TrajectorySample> samples(2);
  samples[0].time = 0.5;
  samples[1].time = 0.5;
  CHECK_THROWS_AS(Trajectory(samples, {}), InvalidDurationError);
}
