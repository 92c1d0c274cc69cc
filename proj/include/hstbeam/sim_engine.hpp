#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hstbeam/config.hpp"
#include "hstbeam/grid.hpp"

namespace hstbeam {

enum class AllocationKind { waterfill, equal };

// One experiment arm. Beamforming off forces equal allocation and unit
// directivity, the omnidirectional baseline the directed modes are measured
// against.
struct RunMode {
  bool beamforming = true;
  AllocationKind allocation = AllocationKind::waterfill;
  bool interference_elimination = true;
  std::optional<std::size_t> beams_per_carriage;  // overrides the config value when set

  // Colon-joined spec: "bf" or "nobf", then optionally "waterfill" or
  // "equal", then optionally "on" or "off" for elimination. Omitted parts
  // default to equal and off. Throws config_error on anything else.
  static RunMode parse(const std::string& spec);

  // Underscore-joined normal form, e.g. "bf_waterfill_on". parse(label())
  // round-trips.
  std::string label() const;
};

// Full trace of one traversal. Grids are (instant, carriage); row i holds
// the state at times_s[i] = i * dt. Cumulative columns are trapezoidal in
// time, so row 0 is all zeros.
struct RunResult {
  std::vector<double> times_s;
  Grid<double> signal_w{0, 0, 0.0};
  Grid<double> interference_w{0, 0, 0.0};
  Grid<double> sinr{0, 0, 0.0};
  Grid<double> rate_nats{0, 0, 0.0};
  Grid<double> service_nats{0, 0, 0.0};     // per-carriage cumulative service
  std::vector<double> total_service_nats;   // sum over carriages, per instant

  double final_total() const;
};

RunResult run(const ScenarioConfig& cfg, const RunMode& mode);

// Same config swept over several modes on one shared time grid. Column j of
// totals_nats tracks modes[j]'s cumulative total.
struct CompareResult {
  std::vector<RunMode> modes;
  std::vector<double> times_s;
  Grid<double> totals_nats{0, 0, 0.0};
};

// Requires at least two modes.
CompareResult compare(const ScenarioConfig& cfg, const std::vector<RunMode>& modes);

// One row per (instant, carriage), header
// t_s,k,P_w,I_w,sinr,rate_nats,S_k,S_total. Carriages are numbered from 1.
// Values carry 17 significant digits; lines end with LF.
void write_trace_csv(std::ostream& out, const RunResult& result);

// One row per instant; mode columns are named S_total_m<j>_<label> with j
// numbered from 1 in argument order.
void write_compare_csv(std::ostream& out, const CompareResult& result);

}  // namespace hstbeam
