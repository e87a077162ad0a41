#include "legopt/config.hpp"

#include <fstream>
#include <initializer_list>
#include <string>

#include <nlohmann/json.hpp>

namespace legopt {

namespace {

using nlohmann::json;

// Fail-closed: any key outside the allowlist aborts the parse so typos in
// physics constants cannot slip through silently.
void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) {
    throw ConfigError(path + ": expected an object");
  }
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(path + ": unknown field \"" + item.key() + "\"");
    }
  }
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ConfigError(path + ": expected a number");
  }
  return j.get<double>();
}

void read_number(const json& j, const std::string& path, const char* key, double& out) {
  if (j.contains(key)) out = require_number(j.at(key), path + "." + key);
}

void read_int(const json& j, const std::string& path, const char* key, int& out) {
  if (j.contains(key)) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
      throw ConfigError(path + "." + key + ": expected an integer");
    }
    out = v.get<int>();
  }
}

void read_u64(const json& j, const std::string& path, const char* key, std::uint64_t& out) {
  if (j.contains(key)) {
    const json& v = j.at(key);
    if (!v.is_number_unsigned() && !v.is_number_integer()) {
      throw ConfigError(path + "." + key + ": expected an integer");
    }
    out = v.get<std::uint64_t>();
  }
}

Eigen::Vector3d read_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError(path + ": expected an array of three numbers");
  }
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v[i] = require_number(j.at(i), path);
  return v;
}

void read_waypoint(const json& j, const std::string& path, Waypoint& wp) {
  check_keys(j, path, {"angle", "velocity", "acceleration"});
  if (j.contains("angle")) wp.angle = read_vec3(j.at("angle"), path + ".angle");
  if (j.contains("velocity")) wp.velocity = read_vec3(j.at("velocity"), path + ".velocity");
  if (j.contains("acceleration"))
    wp.acceleration = read_vec3(j.at("acceleration"), path + ".acceleration");
}

void read_segment(const json& j, const std::string& path, SegmentConfig& seg) {
  check_keys(j, path, {"length", "height", "width", "mass", "wall_thickness"});
  read_number(j, path, "length", seg.length);
  read_number(j, path, "height", seg.height);
  read_number(j, path, "width", seg.width);
  if (j.contains("mass")) seg.mass = require_number(j.at("mass"), path + ".mass");
  if (j.contains("wall_thickness")) {
    seg.wall_thickness = require_number(j.at("wall_thickness"), path + ".wall_thickness");
  }
}

json waypoint_to_json(const Waypoint& wp) {
  return json{{"angle", {wp.angle[0], wp.angle[1], wp.angle[2]}},
              {"velocity", {wp.velocity[0], wp.velocity[1], wp.velocity[2]}},
              {"acceleration", {wp.acceleration[0], wp.acceleration[1], wp.acceleration[2]}}};
}

json segment_to_json(const SegmentConfig& seg) {
  json j{{"length", seg.length}, {"height", seg.height}, {"width", seg.width}};
  if (seg.mass) j["mass"] = *seg.mass;
  if (seg.wall_thickness) j["wall_thickness"] = *seg.wall_thickness;
  return j;
}

}  // namespace

RunConfig parse_run_config(const json& j) {
  RunConfig cfg;
  check_keys(j, "$",
             {"schema_version", "material", "geometry", "trajectory", "ga", "energy_mode",
              "fitness_aggregation", "oracle", "verify", "output_dir"});
  if (j.contains("schema_version")) {
    read_int(j, "$", "schema_version", cfg.schema_version);
    if (cfg.schema_version != kConfigSchemaVersion) {
      throw ConfigError("$.schema_version: unsupported version " +
                        std::to_string(cfg.schema_version));
    }
  }
  if (j.contains("material")) {
    const json& m = j.at("material");
    check_keys(m, "$.material", {"density", "elastic_modulus", "gravity", "base_height"});
    read_number(m, "$.material", "density", cfg.material.density);
    read_number(m, "$.material", "elastic_modulus", cfg.material.elastic_modulus);
    read_number(m, "$.material", "gravity", cfg.material.gravity);
    read_number(m, "$.material", "base_height", cfg.material.base_height);
  }
  if (j.contains("geometry")) {
    const json& g = j.at("geometry");
    check_keys(g, "$.geometry", {"coxa", "femur", "tibia"});
    if (g.contains("coxa")) read_segment(g.at("coxa"), "$.geometry.coxa", cfg.coxa);
    if (g.contains("femur")) read_segment(g.at("femur"), "$.geometry.femur", cfg.femur);
    if (g.contains("tibia")) read_segment(g.at("tibia"), "$.geometry.tibia", cfg.tibia);
  }
  if (j.contains("trajectory")) {
    const json& t = j.at("trajectory");
    check_keys(t, "$.trajectory", {"total_time", "samples_per_phase", "waypoints"});
    read_number(t, "$.trajectory", "total_time", cfg.total_time);
    read_int(t, "$.trajectory", "samples_per_phase", cfg.samples_per_phase);
    if (t.contains("waypoints")) {
      const json& w = t.at("waypoints");
      check_keys(w, "$.trajectory.waypoints", {"start", "mid", "end"});
      if (w.contains("start"))
        read_waypoint(w.at("start"), "$.trajectory.waypoints.start", cfg.waypoints.start);
      if (w.contains("mid"))
        read_waypoint(w.at("mid"), "$.trajectory.waypoints.mid", cfg.waypoints.mid);
      if (w.contains("end"))
        read_waypoint(w.at("end"), "$.trajectory.waypoints.end", cfg.waypoints.end);
    }
  }
  if (j.contains("ga")) {
    const json& g = j.at("ga");
    check_keys(g, "$.ga",
               {"population_size", "generations", "seed", "crossover_rate", "mutation_rate",
                "mutation_sigma", "tournament_size", "elitism_count", "bounds_margin",
                "reach_margin", "stiffness_margin", "penalty_coeff", "torque_weight",
                "energy_weight"});
    read_int(g, "$.ga", "population_size", cfg.ga.population_size);
    read_int(g, "$.ga", "generations", cfg.ga.generations);
    read_u64(g, "$.ga", "seed", cfg.ga.seed);
    read_number(g, "$.ga", "crossover_rate", cfg.ga.crossover_rate);
    read_number(g, "$.ga", "mutation_rate", cfg.ga.mutation_rate);
    read_number(g, "$.ga", "mutation_sigma", cfg.ga.mutation_sigma);
    read_int(g, "$.ga", "tournament_size", cfg.ga.tournament_size);
    read_int(g, "$.ga", "elitism_count", cfg.ga.elitism_count);
    read_number(g, "$.ga", "bounds_margin", cfg.bounds_margin);
    read_number(g, "$.ga", "reach_margin", cfg.ga.reach_margin);
    read_number(g, "$.ga", "stiffness_margin", cfg.ga.stiffness_margin);
    read_number(g, "$.ga", "penalty_coeff", cfg.ga.penalty_coeff);
    read_number(g, "$.ga", "torque_weight", cfg.ga.torque_weight);
    read_number(g, "$.ga", "energy_weight", cfg.ga.energy_weight);
  }
  if (j.contains("energy_mode")) {
    if (!j.at("energy_mode").is_string()) {
      throw ConfigError("$.energy_mode: expected a string");
    }
    const std::string mode = j.at("energy_mode").get<std::string>();
    if (mode == "absolute") {
      cfg.energy_mode = EnergyMode::kAbsolute;
    } else if (mode == "signed") {
      cfg.energy_mode = EnergyMode::kSigned;
    } else {
      throw ConfigError("$.energy_mode: expected \"absolute\" or \"signed\"");
    }
  }
  if (j.contains("fitness_aggregation")) {
    const json& v = j.at("fitness_aggregation");
    if (!v.is_string()) throw ConfigError("$.fitness_aggregation: expected a string");
    const std::string agg = v.get<std::string>();
    if (agg == "mean") {
      cfg.ga.aggregation = FitnessAggregation::kMeanOverJoints;
    } else if (agg == "hip_only") {
      cfg.ga.aggregation = FitnessAggregation::kHipOnly;
    } else {
      throw ConfigError("$.fitness_aggregation: expected \"mean\" or \"hip_only\"");
    }
  }
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    check_keys(o, "$.oracle", {"angle_step", "time_step", "tolerance"});
    read_number(o, "$.oracle", "angle_step", cfg.oracle.angle_step);
    read_number(o, "$.oracle", "time_step", cfg.oracle.time_step);
    read_number(o, "$.oracle", "tolerance", cfg.oracle.tolerance);
  }
  if (j.contains("verify")) {
    const json& v = j.at("verify");
    check_keys(v, "$.verify",
               {"sweep_states", "sweep_seed", "power_balance_tolerance", "roundtrip_dt",
                "roundtrip_tolerance", "energy_drift_dt", "energy_drift_tolerance"});
    read_int(v, "$.verify", "sweep_states", cfg.verify.sweep_states);
    read_u64(v, "$.verify", "sweep_seed", cfg.verify.sweep_seed);
    read_number(v, "$.verify", "power_balance_tolerance", cfg.verify.power_balance_tolerance);
    read_number(v, "$.verify", "roundtrip_dt", cfg.verify.roundtrip_dt);
    read_number(v, "$.verify", "roundtrip_tolerance", cfg.verify.roundtrip_tolerance);
    read_number(v, "$.verify", "energy_drift_dt", cfg.verify.energy_drift_dt);
    read_number(v, "$.verify", "energy_drift_tolerance", cfg.verify.energy_drift_tolerance);
  }
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string()) throw ConfigError("$.output_dir: expected a string");
    cfg.output_dir = j.at("output_dir").get<std::string>();
  }

  if (!(cfg.total_time > 0.0)) throw ConfigError("$.trajectory.total_time must be positive");
  if (cfg.samples_per_phase < 1)
    throw ConfigError("$.trajectory.samples_per_phase must be >= 1");
  if (!(cfg.bounds_margin > 0.0) || !(cfg.bounds_margin < 1.0))
    throw ConfigError("$.ga.bounds_margin must be in (0,1)");
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " + e.what());
  }
  return parse_run_config(j);
}

json to_json(const RunConfig& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  j["material"] = {{"density", cfg.material.density},
                   {"elastic_modulus", cfg.material.elastic_modulus},
                   {"gravity", cfg.material.gravity},
                   {"base_height", cfg.material.base_height}};
  j["geometry"] = {{"coxa", segment_to_json(cfg.coxa)},
                   {"femur", segment_to_json(cfg.femur)},
                   {"tibia", segment_to_json(cfg.tibia)}};
  j["trajectory"] = {{"total_time", cfg.total_time},
                     {"samples_per_phase", cfg.samples_per_phase},
                     {"waypoints",
                      {{"start", waypoint_to_json(cfg.waypoints.start)},
                       {"mid", waypoint_to_json(cfg.waypoints.mid)},
                       {"end", waypoint_to_json(cfg.waypoints.end)}}}};
  j["ga"] = {{"population_size", cfg.ga.population_size},
             {"generations", cfg.ga.generations},
             {"seed", cfg.ga.seed},
             {"crossover_rate", cfg.ga.crossover_rate},
             {"mutation_rate", cfg.ga.mutation_rate},
             {"mutation_sigma", cfg.ga.mutation_sigma},
             {"tournament_size", cfg.ga.tournament_size},
             {"elitism_count", cfg.ga.elitism_count},
             {"bounds_margin", cfg.bounds_margin},
             {"reach_margin", cfg.ga.reach_margin},
             {"stiffness_margin", cfg.ga.stiffness_margin},
             {"penalty_coeff", cfg.ga.penalty_coeff},
             {"torque_weight", cfg.ga.torque_weight},
             {"energy_weight", cfg.ga.energy_weight}};
  j["energy_mode"] = cfg.energy_mode == EnergyMode::kAbsolute ? "absolute" : "signed";
  j["fitness_aggregation"] =
      cfg.ga.aggregation == FitnessAggregation::kMeanOverJoints ? "mean" : "hip_only";
  j["oracle"] = {{"angle_step", cfg.oracle.angle_step},
                 {"time_step", cfg.oracle.time_step},
                 {"tolerance", cfg.oracle.tolerance}};
  j["verify"] = {{"sweep_states", cfg.verify.sweep_states},
                 {"sweep_seed", cfg.verify.sweep_seed},
                 {"power_balance_tolerance", cfg.verify.power_balance_tolerance},
                 {"roundtrip_dt", cfg.verify.roundtrip_dt},
                 {"roundtrip_tolerance", cfg.verify.roundtrip_tolerance},
                 {"energy_drift_dt", cfg.verify.energy_drift_dt},
                 {"energy_drift_tolerance", cfg.verify.energy_drift_tolerance}};
  j["output_dir"] = cfg.output_dir;
  return j;
}

SegmentDims resolve_segment(const SegmentConfig& seg, double density) {
  SegmentDims dims;
  dims.length = seg.length;
  dims.height = seg.height;
  dims.width = seg.width;
  if (seg.wall_thickness) {
    dims.wall_thickness = *seg.wall_thickness;
  } else if (seg.mass) {
    dims.wall_thickness =
        calibrate_wall_thickness(seg.length, seg.height, seg.width, *seg.mass, density);
  } else {
    throw ConfigError("segment needs either wall_thickness or mass");
  }
  validate(dims);
  return dims;
}

LegGeometry resolve_geometry(const RunConfig& cfg) {
  LegGeometry geom;
  geom.coxa = resolve_segment(cfg.coxa, cfg.material.density);
  geom.femur = resolve_segment(cfg.femur, cfg.material.density);
  geom.tibia = resolve_segment(cfg.tibia, cfg.material.density);
  return geom;
}

LegGeometry parse_geometry(const json& j) {
  check_keys(j, "$", {"coxa", "femur", "tibia"});
  LegGeometry geom;
  const char* names[3] = {"coxa", "femur", "tibia"};
  for (int i = 0; i < 3; ++i) {
    if (!j.contains(names[i])) {
      throw ConfigError(std::string("$.") + names[i] + ": missing segment");
    }
    const json& s = j.at(names[i]);
    const std::string path = std::string("$.") + names[i];
    check_keys(s, path, {"length", "height", "width", "wall_thickness"});
    SegmentDims dims;
    for (const char* key : {"length", "height", "width", "wall_thickness"}) {
      if (!s.contains(key)) {
        throw ConfigError(path + "." + key + ": missing field");
      }
    }
    dims.length = require_number(s.at("length"), path + ".length");
    dims.height = require_number(s.at("height"), path + ".height");
    dims.width = require_number(s.at("width"), path + ".width");
    dims.wall_thickness = require_number(s.at("wall_thickness"), path + ".wall_thickness");
    geom.segment(i) = dims;
  }
  validate(geom);
  return geom;
}

LegGeometry load_geometry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open geometry file " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("geometry parse error in " + path.string() + ": " + e.what());
  }
  return parse_geometry(j);
}

json geometry_to_json(const LegGeometry& geom) {
  json j;
  const char* names[3] = {"coxa", "femur", "tibia"};
  for (int i = 0; i < 3; ++i) {
    const SegmentDims& d = geom.segment(i);
    j[names[i]] = {{"length", d.length},
                   {"height", d.height},
                   {"width", d.width},
                   {"wall_thickness", d.wall_thickness}};
  }
  return j;
}

}  // namespace legopt
