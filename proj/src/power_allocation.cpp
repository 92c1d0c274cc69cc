#include "hstbeam/power_allocation.hpp"

#include <cmath>
#include <stdexcept>

namespace hstbeam {

namespace {

void check_inputs(const std::vector<double>& gains, double total_power_w) {
  if (gains.empty()) throw std::invalid_argument("allocation needs at least one carriage");
  if (!std::isfinite(total_power_w) || total_power_w <= 0.0)
    throw std::invalid_argument("total power must be positive");
  for (const double g : gains)
    if (!std::isfinite(g) || g <= 0.0)
      throw std::invalid_argument("carriage gains must be positive and finite");
}

}  // namespace

Allocation waterfill(const std::vector<double>& gains, double total_power_w) {
  check_inputs(gains, total_power_w);
  const std::size_t count = gains.size();

  // Inverse gains in fraction units: f_k + inv[k] is k's share of the water
  // column, so carriages with inv above the level drop out.
  std::vector<double> inv(count);
  for (std::size_t k = 0; k < count; ++k) inv[k] = 1.0 / (total_power_w * gains[k]);

  Allocation alloc;
  alloc.fractions.assign(count, 0.0);
  alloc.active.assign(count, true);

  // Each pass removes every carriage the current level cannot cover; the
  // level only rises as the set shrinks, and a single survivor always gets
  // a positive share, so this ends within count passes.
  double water = 0.0;
  for (std::size_t pass = 0; pass < count; ++pass) {
    std::size_t live = 0;
    double inv_sum = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      if (!alloc.active[k]) continue;
      ++live;
      inv_sum += inv[k];
    }
    water = (1.0 + inv_sum) / static_cast<double>(live);
    bool dropped = false;
    for (std::size_t k = 0; k < count; ++k) {
      if (alloc.active[k] && water - inv[k] <= 0.0) {
        alloc.active[k] = false;
        dropped = true;
      }
    }
    if (!dropped) break;
  }

  std::size_t survivors = 0;
  std::size_t lone = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (!alloc.active[k]) continue;
    alloc.fractions[k] = water - inv[k];
    ++survivors;
    lone = k;
  }
  // A lone survivor owns the whole budget; assigning it directly keeps the
  // budget exact instead of within rounding of the subtraction above.
  if (survivors == 1) alloc.fractions[lone] = 1.0;
  alloc.water_level = water;
  alloc.multiplier = 1.0 / (water * total_power_w * static_cast<double>(count));
  return alloc;
}

Allocation equal_allocation(std::size_t carriage_count) {
  if (carriage_count == 0) throw std::invalid_argument("allocation needs at least one carriage");
  Allocation alloc;
  alloc.fractions.assign(carriage_count, 1.0 / static_cast<double>(carriage_count));
  alloc.active.assign(carriage_count, true);
  return alloc;
}

double kkt_residual(const Allocation& alloc, const std::vector<double>& gains,
                    double total_power_w) {
  check_inputs(gains, total_power_w);
  if (alloc.fractions.size() != gains.size() || alloc.active.size() != gains.size())
    throw std::invalid_argument("allocation and gains disagree on carriage count");

  const double target = alloc.multiplier * static_cast<double>(gains.size());
  double spread = 0.0;
  double budget = 0.0;
  for (std::size_t k = 0; k < gains.size(); ++k) {
    budget += alloc.fractions[k];
    if (!alloc.active[k]) continue;
    const double marginal =
        gains[k] / (1.0 + total_power_w * alloc.fractions[k] * gains[k]);
    spread = std::max(spread, std::abs(marginal - target));
  }
  return spread + std::abs(budget - 1.0);
}

}  // namespace hstbeam
