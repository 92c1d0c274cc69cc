#pragma once

#include <cstddef>
#include <vector>

namespace hstbeam {

// Power fractions over the total budget, one per carriage. Fractions are
// nonnegative and sum to 1 whenever any carriage is active.
struct Allocation {
  std::vector<double> fractions;
  std::vector<bool> active;   // false where the water level shut a carriage off
  double water_level = 0.0;   // in fraction units, 0 when nothing is active
  double multiplier = 0.0;    // dual variable of the budget constraint
};

// Maximises sum log(1 + P f_k g_k) over the simplex of fractions f, for
// total power P and per-carriage gains g (effective_gain values). Carriages
// whose inverse gain sits above the water level get zero. Gains must be
// positive and finite.
Allocation waterfill(const std::vector<double>& gains, double total_power_w);

// Uniform fractions, every carriage active.
Allocation equal_allocation(std::size_t carriage_count);

// Stationarity defect of an allocation for the same objective: the spread of
// marginal utilities across active carriages plus the budget violation.
// Zero in exact arithmetic at the optimum.
double kkt_residual(const Allocation& alloc, const std::vector<double>& gains,
                    double total_power_w);

}  // namespace hstbeam
