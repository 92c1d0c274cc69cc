#include <doctest.h>

#include <sstream>
#include <string>

#include "hstbeam/config.hpp"
#include "hstbeam/errors.hpp"

using hstbeam::ScenarioConfig;

namespace {

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return hstbeam::parse_config(in);
}

}  // namespace

TEST_CASE("defaults describe the reference scenario") {
  const ScenarioConfig cfg;
  CHECK(cfg.velocity_mps == doctest::Approx(100.0));
  CHECK(cfg.carriage_count == 16);
  CHECK(cfg.beam_count == 32);
  CHECK(cfg.beams_per_carriage == 1);
  CHECK(cfg.total_power_w == doctest::Approx(1.0));
  CHECK(cfg.noise_power_w ==
        doctest::Approx(hstbeam::dbm_to_watt(-104.0)).epsilon(1e-15));
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("dbm conversion") {
  CHECK(hstbeam::dbm_to_watt(30.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hstbeam::dbm_to_watt(40.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(hstbeam::dbm_to_watt(0.0) == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(hstbeam::dbm_to_watt(-104.0) ==
        doctest::Approx(3.9810717055349693e-14).epsilon(1e-15));
}

TEST_CASE("full key=value file parses with unit conversions") {
  const ScenarioConfig cfg = parse(
      "# reference scenario\n"
      "velocity_kmh = 360\n"
      "h_m = 50\n"
      "K = 16\n"
      "Lc_m = 25\n"
      "X_m = 500\n"
      "N = 32\n"
      "alpha = 3\n"
      "power_dbm = 30  # one watt\n"
      "noise_dbm = -104\n"
      "dt_s = 0.001\n"
      "Ns = 1\n"
      "theta_bias_rad = 0.05\n"
      "\n");
  CHECK(cfg.velocity_mps == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(cfg.antenna_height_m == 50.0);
  CHECK(cfg.carriage_count == 16);
  CHECK(cfg.carriage_length_m == 25.0);
  CHECK(cfg.cell_half_span_m == 500.0);
  CHECK(cfg.beam_count == 32);
  CHECK(cfg.path_loss_exponent == 3.0);
  CHECK(cfg.total_power_w == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cfg.noise_power_w == doctest::Approx(3.9810717055349693e-14).epsilon(1e-15));
  CHECK(cfg.dt_s == 0.001);
  CHECK(cfg.beams_per_carriage == 1);
  CHECK(cfg.theta_bias_rad == 0.05);
}

TEST_CASE("missing keys keep defaults") {
  const ScenarioConfig cfg = parse("K = 4\n");
  CHECK(cfg.carriage_count == 4);
  CHECK(cfg.beam_count == 32);
  CHECK(cfg.dt_s == 1e-3);
}

TEST_CASE("unknown key is rejected with its line number") {
  CHECK_THROWS_WITH_AS(parse("K = 4\nbogus = 1\n"),
                       "config line 2: unknown key 'bogus'", hstbeam::config_error);
}

TEST_CASE("duplicate key is rejected") {
  CHECK_THROWS_WITH_AS(parse("K = 4\n\nK = 5\n"),
                       "config line 3: duplicate key 'K'", hstbeam::config_error);
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS_AS(parse("K\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("= 4\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("alpha = fast\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("alpha = 3.0x\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("alpha =\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("K = -2\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("K = 3.5\n"), hstbeam::config_error);
  CHECK_THROWS_AS(parse("dt_s = 1e999\n"), hstbeam::config_error);
}

TEST_CASE("validate enforces the documented ranges") {
  ScenarioConfig cfg;

  cfg = ScenarioConfig{};
  cfg.velocity_mps = 0.0;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);

  cfg = ScenarioConfig{};
  cfg.antenna_height_m = -1.0;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);

  cfg = ScenarioConfig{};
  cfg.carriage_count = 0;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);

  cfg = ScenarioConfig{};
  cfg.path_loss_exponent = 1.9;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);
  cfg.path_loss_exponent = 5.1;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);
  cfg.path_loss_exponent = 2.0;
  CHECK_NOTHROW(cfg.validate());
  cfg.path_loss_exponent = 5.0;
  CHECK_NOTHROW(cfg.validate());

  cfg = ScenarioConfig{};
  cfg.dt_s = 0.0;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);

  cfg = ScenarioConfig{};
  cfg.beams_per_carriage = 0;
  CHECK_THROWS_AS(cfg.validate(), hstbeam::config_error);
}

TEST_CASE("over-committed beam demand is infeasible, not a config error") {
  ScenarioConfig cfg;
  cfg.carriage_count = 16;
  cfg.beams_per_carriage = 3;  // 48 > 32
  CHECK_THROWS_AS(cfg.validate(), hstbeam::infeasible_error);
  cfg.beams_per_carriage = 2;  // 32 == 32 is allowed
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("missing config file reports the path") {
  CHECK_THROWS_AS(hstbeam::load_config("/nonexistent/path.cfg"), hstbeam::config_error);
}
