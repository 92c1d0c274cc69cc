#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hstbeam/config.hpp"
#include "hstbeam/errors.hpp"
#include "hstbeam/sim_engine.hpp"

namespace {

struct Overrides {
  double dt_s = 0.0;
  double power_dbm = 0.0;
  std::size_t beams_per_carriage = 0;
  bool has_dt = false;
  bool has_power = false;
  bool has_ns = false;
};

void add_override_options(CLI::App& cmd, Overrides& ov) {
  cmd.add_option("--dt", ov.dt_s, "Override the trace step in seconds")
      ->each([&ov](const std::string&) { ov.has_dt = true; });
  cmd.add_option("--power-dbm", ov.power_dbm, "Override the total transmit power in dBm")
      ->each([&ov](const std::string&) { ov.has_power = true; });
  cmd.add_option("--ns", ov.beams_per_carriage, "Override the beams per carriage")
      ->each([&ov](const std::string&) { ov.has_ns = true; });
}

hstbeam::ScenarioConfig load_with_overrides(const std::string& path, const Overrides& ov) {
  hstbeam::ScenarioConfig cfg = hstbeam::load_config(path);
  if (ov.has_dt) cfg.dt_s = ov.dt_s;
  if (ov.has_power) cfg.total_power_w = hstbeam::dbm_to_watt(ov.power_dbm);
  if (ov.has_ns) cfg.beams_per_carriage = ov.beams_per_carriage;
  cfg.validate();
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  // Binary keeps the LF line endings the trace format promises.
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hstbeam::config_error("cannot open output file '" + path + "'");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw hstbeam::config_error("failed writing output file '" + path + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-beam downlink service simulator for a train crossing one cell"};
  app.require_subcommand(1);

  std::string run_config;
  std::string run_mode = "bf";
  std::string run_alloc = "waterfill";
  std::string run_interference = "on";
  std::string run_out;
  Overrides run_ov;
  CLI::App* run_cmd = app.add_subcommand("run", "Trace one mode to CSV");
  run_cmd->add_option("--config", run_config, "Scenario config file")->required();
  run_cmd->add_option("--mode", run_mode, "bf or nobf")
      ->check(CLI::IsMember({"bf", "nobf"}));
  CLI::Option* alloc_opt =
      run_cmd->add_option("--alloc", run_alloc, "waterfill or equal")
          ->check(CLI::IsMember({"waterfill", "equal"}));
  run_cmd->add_option("--interference", run_interference, "Conflict elimination: on or off")
      ->check(CLI::IsMember({"on", "off"}));
  run_cmd->add_option("--out", run_out, "Output CSV path")->required();
  add_override_options(*run_cmd, run_ov);

  std::string cmp_config;
  std::string cmp_modes;
  std::string cmp_out;
  Overrides cmp_ov;
  CLI::App* cmp_cmd = app.add_subcommand("compare", "Trace several modes side by side");
  cmp_cmd->add_option("--config", cmp_config, "Scenario config file")->required();
  cmp_cmd->add_option("--modes", cmp_modes,
                      "Comma-separated mode specs, e.g. bf:waterfill:on,nobf")
      ->required();
  cmp_cmd->add_option("--out", cmp_out, "Output CSV path")->required();
  add_override_options(*cmp_cmd, cmp_ov);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed()) {
      if (run_mode == "nobf") {
        if (*alloc_opt && run_alloc == "waterfill")
          throw hstbeam::config_error("--mode nobf forces --alloc equal");
        run_alloc = "equal";
      }
      const hstbeam::RunMode mode =
          hstbeam::RunMode::parse(run_mode + ":" + run_alloc + ":" + run_interference);
      const hstbeam::ScenarioConfig cfg = load_with_overrides(run_config, run_ov);
      const hstbeam::RunResult result = hstbeam::run(cfg, mode);
      std::ofstream out = open_output(run_out);
      hstbeam::write_trace_csv(out, result);
      finish_output(out, run_out);
    } else {
      std::vector<hstbeam::RunMode> modes;
      for (const std::string& spec : split_list(cmp_modes))
        modes.push_back(hstbeam::RunMode::parse(spec));
      const hstbeam::ScenarioConfig cfg = load_with_overrides(cmp_config, cmp_ov);
      const hstbeam::CompareResult result = hstbeam::compare(cfg, modes);
      std::ofstream out = open_output(cmp_out);
      hstbeam::write_compare_csv(out, result);
      finish_output(out, cmp_out);
    }
  } catch (const hstbeam::config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hstbeam::infeasible_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
