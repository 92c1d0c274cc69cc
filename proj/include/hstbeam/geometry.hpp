#pragma once

#include <cstddef>

#include "hstbeam/config.hpp"

namespace hstbeam {

// Track-relative placement of one receiver at one instant. The base station
// sits at track coordinate 0, offset antenna_height_m from the rail.
struct CarriageState {
  double x_m;          // signed track coordinate of the receiver
  double distance_m;   // line-of-sight range to the base station
  double theta_rad;    // angle off the track axis, in (0, pi)
};

// Receiver position for 0-based carriage k at time t. Carriage 0 leads;
// receivers sit at the carriage midpoints, spaced carriage_length_m apart.
// At t = 0 the head receiver is at +cell_half_span_m and the train moves
// toward -x.
double carriage_x(const ScenarioConfig& cfg, std::size_t k, double t_s);

CarriageState carriage_state(const ScenarioConfig& cfg, std::size_t k, double t_s);

// Time for the whole train to cross the cell: the tail receiver reaches
// -cell_half_span_m. Traces cover [0, service_time].
double service_time(const ScenarioConfig& cfg);

}  // namespace hstbeam
