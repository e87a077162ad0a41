#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "legopt/dynamics.hpp"
#include "test_support.hpp"

using namespace legopt;
using namespace legopt::test;

namespace {

constexpr double kPi = M_PI;

DynamicsParams table_params() {
  return make_dynamics_params(initial_geometry(), default_material());
}

}  // namespace

TEST_CASE("kinetic energy vanishes at rest") {
  const DynamicsParams p = table_params();
  JointState s;
  s.angle = Eigen::Vector3d(0.4, -1.2, 0.7);
  CHECK(kinetic_energy(p, s) == 0.0);
}

TEST_CASE("yaw-only kinetic energy at the stretched pose") {
  const DynamicsParams p = table_params();
  JointState s;
  s.velocity = Eigen::Vector3d(3.0, 0.0, 0.0);
  const double w2 = 9.0;
  const double l1 = p.length[0], l2 = p.length[1];
  const double a2 = p.segment[1].com_offset, a3 = p.segment[2].com_offset;
  const double expected = 0.5 * (p.segment[0].mass * p.segment[0].com_offset *
                                     p.segment[0].com_offset +
                                 p.segment[0].inertia) * w2 +
                          0.5 * p.segment[1].mass * (l1 + a2) * (l1 + a2) * w2 +
                          0.5 * p.segment[2].mass * (l1 + l2 + a3) * (l1 + l2 + a3) * w2;
  CHECK(kinetic_energy(p, s) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("kinetic energy equals the quadratic form of the inertia matrix") {
  const DynamicsParams p = table_params();
  UniformRng rng(7);
  for (int k = 0; k < 300; ++k) {
    JointState s;
    for (int i = 0; i < 3; ++i) s.angle[i] = rng(-kPi, kPi);
    for (int i = 0; i < 3; ++i) s.velocity[i] = rng(-10, 10);
    const Eigen::Matrix3d m = mass_matrix(p, s.angle);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const double quad = 0.5 * s.velocity.dot(m * s.velocity);
    CHECK(kinetic_energy(p, s) == doctest::Approx(quad).epsilon(1e-12));
  }
}

TEST_CASE("potential energy anchors") {
  const DynamicsParams p = table_params();
  JointState s;
  CHECK(potential_energy(p, s) == 0.0);  // stretched flat, h0 = 0

  s.angle = Eigen::Vector3d(0.0, kPi / 2, kPi / 2);  // theta3 - theta2 = 0
  const double expected = p.gravity * (p.segment[1].mass * p.segment[1].com_offset +
                                       p.segment[2].mass * p.length[1]);
  CHECK(potential_energy(p, s) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("potential energy at the swing start matches the COM-height route") {
  const DynamicsParams p = table_params();
  JointState s;
  s.angle = Eigen::Vector3d(-kPi / 4, -kPi / 4, -kPi / 4);
  const double ep = potential_energy(p, s);
  CHECK(ep == doctest::Approx(-77.40011229727011).epsilon(1e-12));
  // independent route: g * sum(m_i * z_com_i)
  const double z2 = p.segment[1].com_offset * std::sin(s.angle[1]);
  const double z3 = p.length[1] * std::sin(s.angle[1]) -
                    p.segment[2].com_offset * std::sin(s.angle[2] - s.angle[1]);
  CHECK(ep == doctest::Approx(p.gravity * (p.segment[1].mass * z2 + p.segment[2].mass * z3))
                  .epsilon(1e-13));
}

TEST_CASE("static torques match the closed-form gravity expressions") {
  const DynamicsParams p = table_params();
  const double m2 = p.segment[1].mass, m3 = p.segment[2].mass;
  const double l2 = p.length[1], l3 = p.length[2], g = p.gravity;
  UniformRng rng(11);
  for (int k = 0; k < 100; ++k) {
    JointState s;
    for (int i = 0; i < 3; ++i) s.angle[i] = rng(-kPi, kPi);
    const Eigen::Vector3d tau = inverse_dynamics(p, s);
    const double c2 = std::cos(s.angle[1]);
    const double c32 = std::cos(s.angle[2] - s.angle[1]);
    const double hip = 0.5 * m2 * g * l2 * c2 + m3 * g * l2 * c2 + 0.5 * m3 * g * l3 * c32;
    const double knee = -0.5 * m3 * g * l3 * c32;
    CHECK(tau[0] == 0.0);
    CHECK(std::abs(tau[1] - hip) < 1e-12 * std::max(1.0, std::abs(hip)));
    CHECK(std::abs(tau[2] - knee) < 1e-12 * std::max(1.0, std::abs(knee)));
  }
}

TEST_CASE("zero-gravity yaw spin produces centrifugal pitch torques only") {
  DynamicsParams p = table_params();
  p.gravity = 0.0;
  JointState s;
  s.angle = Eigen::Vector3d(0.3, -0.4, 0.2);
  s.velocity = Eigen::Vector3d(2.0, 0.0, 0.0);
  const Eigen::Vector3d tau = inverse_dynamics(p, s);
  CHECK(tau[0] == 0.0);
  CHECK(tau[1] == doctest::Approx(-15.776144513508957).epsilon(1e-12));
  CHECK(tau[2] == doctest::Approx(5.56612573596583).epsilon(1e-12));
}

TEST_CASE("torques are homogeneous of degree one in the masses and inertias") {
  DynamicsParams p = table_params();
  DynamicsParams doubled = p;
  for (auto& seg : doubled.segment) {
    seg.mass *= 2.0;
    seg.inertia *= 2.0;
  }
  UniformRng rng(23);
  for (int k = 0; k < 50; ++k) {
    JointState s;
    for (int i = 0; i < 3; ++i) s.angle[i] = rng(-kPi, kPi);
    for (int i = 0; i < 3; ++i) s.velocity[i] = rng(-10, 10);
    for (int i = 0; i < 3; ++i) s.acceleration[i] = rng(-50, 50);
    const Eigen::Vector3d tau = inverse_dynamics(p, s);
    const Eigen::Vector3d tau2 = inverse_dynamics(doubled, s);
    CHECK((tau2 - 2.0 * tau).cwiseAbs().maxCoeff() <
          1e-12 * std::max(1.0, tau.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("torque trace over the default swing") {
  const DynamicsParams p = table_params();
  const Trajectory traj = plan_swing(default_waypoints(), 2.0, 100);
  const TorqueTrace trace = torque_trace(p, traj);
  REQUIRE(trace.size() == traj.size());

  double peak[3] = {0, 0, 0};
  for (const auto& tau : trace.torque) {
    for (int i = 0; i < 3; ++i) peak[i] = std::max(peak[i], std::abs(tau[i]));
  }
  // the hip dominates the profile
  CHECK(peak[1] > peak[0]);
  CHECK(peak[1] > peak[2]);
  CHECK(peak[0] == doctest::Approx(21.263380082778028).epsilon(1e-9));
  CHECK(peak[1] == doctest::Approx(190.30491274434578).epsilon(1e-9));
  CHECK(peak[2] == doctest::Approx(57.885920724379986).epsilon(1e-9));

  // power series is torque times rate
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Eigen::Vector3d expected =
        trace.torque[i].cwiseProduct(traj.samples()[i].velocity);
    CHECK((trace.power[i] - expected).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("empty trajectory is rejected") {
  CHECK_THROWS_AS(torque_trace(table_params(), Trajectory{}), EmptyInputError);
}
