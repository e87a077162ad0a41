#include "legopt/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "legopt/kinematics.hpp"

namespace legopt {

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << content;
}

namespace {

void append_vec(std::ostringstream& row, const Eigen::Vector3d& v) {
  for (int i = 0; i < 3; ++i) row << ',' << format_double(v[i]);
}

}  // namespace

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  std::ostringstream out;
  out << "time,theta1,theta2,theta3,dtheta1,dtheta2,dtheta3,ddtheta1,ddtheta2,ddtheta3\n";
  for (const auto& s : traj.samples()) {
    std::ostringstream row;
    row << format_double(s.time);
    append_vec(row, s.angle);
    append_vec(row, s.velocity);
    append_vec(row, s.acceleration);
    out << row.str() << '\n';
  }
  write_text_file(path, out.str());
}

void write_foot_path_csv(const std::filesystem::path& path, const LegGeometry& geom,
                         const Trajectory& traj, double base_height) {
  std::ostringstream out;
  out << "time,x,y,z,r\n";
  for (const auto& s : traj.samples()) {
    const FootPosition fp = forward_kinematics(geom, s.angle, base_height);
    out << format_double(s.time) << ',' << format_double(fp.cartesian[0]) << ','
        << format_double(fp.cartesian[1]) << ',' << format_double(fp.cartesian[2]) << ','
        << format_double(fp.radial) << '\n';
  }
  write_text_file(path, out.str());
}

void write_torque_csv(const std::filesystem::path& path, const TorqueTrace& trace) {
  std::ostringstream out;
  out << "time,tau1,tau2,tau3,P1,P2,P3\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    std::ostringstream row;
    row << format_double(trace.time[i]);
    append_vec(row, trace.torque[i]);
    append_vec(row, trace.power[i]);
    out << row.str() << '\n';
  }
  write_text_file(path, out.str());
}

void write_power_csv(const std::filesystem::path& path, const PowerCurves& curves) {
  std::ostringstream out;
  out << "time,P1,P2,P3\n";
  for (std::size_t i = 0; i < curves.time.size(); ++i) {
    std::ostringstream row;
    row << format_double(curves.time[i]);
    append_vec(row, curves.power[i]);
    out << row.str() << '\n';
  }
  write_text_file(path, out.str());
}

void write_history_csv(const std::filesystem::path& path,
                       const std::vector<HistoryPoint>& history) {
  std::ostringstream out;
  out << "generation,best_eval,best_objective,torque_penalty,energy_penalty,"
         "reach_penalty,stiffness_penalty\n";
  for (const auto& h : history) {
    out << h.generation << ',' << format_double(h.best_eval) << ','
        << format_double(h.best_objective) << ',' << format_double(h.torque_penalty) << ','
        << format_double(h.energy_penalty) << ',' << format_double(h.reach_penalty) << ','
        << format_double(h.stiffness_penalty) << '\n';
  }
  write_text_file(path, out.str());
}

}  // namespace legopt
