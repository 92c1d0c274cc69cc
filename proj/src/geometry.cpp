#include "hstbeam/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hstbeam {

double carriage_x(const ScenarioConfig& cfg, std::size_t k, double t_s) {
  return cfg.cell_half_span_m - cfg.velocity_mps * t_s -
         static_cast<double>(k) * cfg.carriage_length_m;
}

double service_time(const ScenarioConfig& cfg) {
  return (2.0 * cfg.cell_half_span_m +
          static_cast<double>(cfg.carriage_count) * cfg.carriage_length_m) /
         cfg.velocity_mps;
}

CarriageState carriage_state(const ScenarioConfig& cfg, std::size_t k, double t_s) {
  const double window = service_time(cfg);
  // Final grid instants can overshoot the window by a few ulps of i * dt.
  const double slack = 1e-9 * (1.0 + window);
  if (t_s < -slack || t_s > window + slack)
    throw std::out_of_range("time " + std::to_string(t_s) +
                            " s is outside the traversal window [0, " +
                            std::to_string(window) + "]");
  CarriageState state;
  state.x_m = carriage_x(cfg, k, t_s);
  state.distance_m = std::hypot(state.x_m, cfg.antenna_height_m);
  // atan2 with h > 0 lands in (0, pi): exactly pi/2 at closest approach,
  // never 0 or pi for finite x.
  state.theta_rad = std::atan2(cfg.antenna_height_m, state.x_m);
  return state;
}

}  // namespace hstbeam
