#include "hstbeam/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <string>
#include <string_view>

#include "hstbeam/errors.hpp"

namespace hstbeam {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw config_error("config line " + std::to_string(line_no) + ": " + what);
}

double parse_real(std::string_view text, std::size_t line_no, std::string_view key) {
  const std::string buf(text);
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size())
    fail_at(line_no, "value for '" + std::string(key) + "' is not a number");
  if (errno == ERANGE || !std::isfinite(value))
    fail_at(line_no, "value for '" + std::string(key) + "' is out of range");
  return value;
}

std::size_t parse_count(std::string_view text, std::size_t line_no, std::string_view key) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
    fail_at(line_no, "value for '" + std::string(key) + "' is not an unsigned integer");
  const std::string buf(text);
  errno = 0;
  const unsigned long value = std::strtoul(buf.c_str(), nullptr, 10);
  if (errno == ERANGE) fail_at(line_no, "value for '" + std::string(key) + "' is out of range");
  return static_cast<std::size_t>(value);
}

}  // namespace

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void ScenarioConfig::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(velocity_mps)) throw config_error("velocity must be positive");
  if (!positive(antenna_height_m)) throw config_error("antenna height must be positive");
  if (carriage_count < 1) throw config_error("carriage count must be at least 1");
  if (!positive(carriage_length_m)) throw config_error("carriage length must be positive");
  if (!positive(cell_half_span_m)) throw config_error("cell half-span must be positive");
  if (beam_count < 1) throw config_error("beam count must be at least 1");
  if (!std::isfinite(path_loss_exponent) || path_loss_exponent < 2.0 ||
      path_loss_exponent > 5.0)
    throw config_error("path loss exponent must lie in [2, 5]");
  if (!positive(total_power_w)) throw config_error("total power must be positive");
  if (!positive(noise_power_w)) throw config_error("noise power must be positive");
  if (!positive(dt_s)) throw config_error("time step must be positive");
  if (beams_per_carriage < 1) throw config_error("beams per carriage must be at least 1");
  if (!std::isfinite(theta_bias_rad)) throw config_error("theta bias must be finite");
  // Overflow-safe form of carriage_count * beams_per_carriage > beam_count.
  if (carriage_count > beam_count / beams_per_carriage)
    throw infeasible_error("scenario needs " + std::to_string(carriage_count) + " x " +
                           std::to_string(beams_per_carriage) +
                           " beams but the array has only " + std::to_string(beam_count));
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos)
      text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected key=value");
    const std::string key{trim(text.substr(0, eq))};
    const std::string_view value = trim(text.substr(eq + 1));
    if (key.empty()) fail_at(line_no, "missing key before '='");
    if (!seen.insert(key).second) fail_at(line_no, "duplicate key '" + key + "'");

    if (key == "velocity_kmh") {
      cfg.velocity_mps = parse_real(value, line_no, key) / 3.6;
    } else if (key == "h_m") {
      cfg.antenna_height_m = parse_real(value, line_no, key);
    } else if (key == "K") {
      cfg.carriage_count = parse_count(value, line_no, key);
    } else if (key == "Lc_m") {
      cfg.carriage_length_m = parse_real(value, line_no, key);
    } else if (key == "X_m") {
      cfg.cell_half_span_m = parse_real(value, line_no, key);
    } else if (key == "N") {
      cfg.beam_count = parse_count(value, line_no, key);
    } else if (key == "alpha") {
      cfg.path_loss_exponent = parse_real(value, line_no, key);
    } else if (key == "power_dbm") {
      cfg.total_power_w = dbm_to_watt(parse_real(value, line_no, key));
    } else if (key == "noise_dbm") {
      cfg.noise_power_w = dbm_to_watt(parse_real(value, line_no, key));
    } else if (key == "dt_s") {
      cfg.dt_s = parse_real(value, line_no, key);
    } else if (key == "Ns") {
      cfg.beams_per_carriage = parse_count(value, line_no, key);
    } else if (key == "theta_bias_rad") {
      cfg.theta_bias_rad = parse_real(value, line_no, key);
    } else {
      fail_at(line_no, "unknown key '" + key + "'");
    }
  }
  if (in.bad()) throw config_error("config stream read failed");
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace hstbeam
