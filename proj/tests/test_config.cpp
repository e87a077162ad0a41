#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "legopt/config.hpp"
#include "test_support.hpp"

using namespace legopt;
using nlohmann::json;

TEST_CASE("defaults serialize and re-parse identically") {
  const RunConfig cfg;
  const json j = to_json(cfg);
  const RunConfig back = parse_run_config(j);
  CHECK(to_json(back) == j);  // exact JSON round trip
  CHECK(back.material.density == cfg.material.density);
  CHECK(back.ga.seed == cfg.ga.seed);
  CHECK(back.samples_per_phase == 100);
  CHECK(back.total_time == 2.0);
  CHECK(back.energy_mode == EnergyMode::kAbsolute);
}

TEST_CASE("unknown fields are rejected with their path") {
  json j = to_json(RunConfig{});
  j["material"]["densty"] = 2770.0;
  try {
    parse_run_config(j);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("densty") != std::string::npos);
    CHECK(std::string(e.what()).find("$.material") != std::string::npos);
  }

  json top = json::object();
  top["materail"] = json::object();
  CHECK_THROWS_AS(parse_run_config(top), ConfigError);
}

TEST_CASE("type and range violations are rejected") {
  json j;
  j["trajectory"]["total_time"] = 0.0;
  CHECK_THROWS_AS(parse_run_config(j), ConfigError);

  j = json{};
  j["trajectory"]["total_time"] = "two";
  CHECK_THROWS_AS(parse_run_config(j), ConfigError);

  j = json{};
  j["schema_version"] = 99;
  CHECK_THROWS_AS(parse_run_config(j), ConfigError);

  j = json{};
  j["energy_mode"] = "net";
  CHECK_THROWS_AS(parse_run_config(j), ConfigError);

  j = json{};
  j["trajectory"]["waypoints"]["mid"]["angle"] = {1.0, 2.0};  // needs three entries
  CHECK_THROWS_AS(parse_run_config(j), ConfigError);
}

TEST_CASE("geometry resolution calibrates or honors explicit thickness") {
  const RunConfig cfg;  // masses configured, thickness calibrated
  const LegGeometry geom = resolve_geometry(cfg);
  CHECK(geom.coxa.wall_thickness == doctest::Approx(0.03354704972952022).epsilon(1e-12));

  SegmentConfig explicit_seg{0.2, 0.15, 0.1, 0.02, 55.0};  // thickness wins over mass
  const SegmentDims dims = resolve_segment(explicit_seg, cfg.material.density);
  CHECK(dims.wall_thickness == 0.02);

  SegmentConfig neither{0.2, 0.15, 0.1, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(resolve_segment(neither, cfg.material.density), ConfigError);
}

TEST_CASE("geometry JSON round trip") {
  const LegGeometry geom = test::initial_geometry();
  const json j = geometry_to_json(geom);
  const LegGeometry back = parse_geometry(j);
  for (int i = 0; i < 3; ++i) {
    CHECK(back.segment(i).length == geom.segment(i).length);
    CHECK(back.segment(i).width == geom.segment(i).width);
    CHECK(back.segment(i).height == geom.segment(i).height);
    CHECK(back.segment(i).wall_thickness == geom.segment(i).wall_thickness);
  }

  json bad = j;
  bad["coxa"].erase("length");
  CHECK_THROWS_AS(parse_geometry(bad), ConfigError);
  bad = j;
  bad["femur"]["extra"] = 1.0;
  CHECK_THROWS_AS(parse_geometry(bad), ConfigError);
  // dimension invariants are enforced on load
  bad = j;
  bad["tibia"]["wall_thickness"] = 1.0;
  CHECK_THROWS_AS(parse_geometry(bad), InvalidDimensionsError);
}

TEST_CASE("ga and verify sections parse") {
  json j;
  j["ga"]["population_size"] = 40;
  j["ga"]["seed"] = 7;
  j["ga"]["bounds_margin"] = 0.2;
  j["fitness_aggregation"] = "hip_only";
  j["verify"]["sweep_states"] = 123;
  j["oracle"]["tolerance"] = 1e-5;
  const RunConfig cfg = parse_run_config(j);
  CHECK(cfg.ga.population_size == 40);
  CHECK(cfg.ga.seed == 7);
  CHECK(cfg.bounds_margin == 0.2);
  CHECK(cfg.ga.aggregation == FitnessAggregation::kHipOnly);
  CHECK(cfg.verify.sweep_states == 123);
  CHECK(cfg.oracle.tolerance == 1e-5);
}
