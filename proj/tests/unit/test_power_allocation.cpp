#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hstbeam/power_allocation.hpp"
#include "oracles.hpp"

using hstbeam::Allocation;
using hstbeam::equal_allocation;
using hstbeam::kkt_residual;
using hstbeam::waterfill;

namespace {

// mt19937_64 output is pinned by the standard; scaling it by hand keeps the
// draw sequence identical everywhere, unlike the distribution adapters.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("four-carriage worked example") {
  const std::vector<double> gains{0.5, 2.0, 8.0, 32.0};
  const Allocation alloc = waterfill(gains, 1.0);

  // Closed form: water level (1 + 1/2 + 1/8 + 1/32) / 3 = 53/96 after the
  // weakest carriage drops out.
  CHECK(alloc.active == std::vector<bool>{false, true, true, true});
  CHECK(alloc.water_level == doctest::Approx(53.0 / 96.0).epsilon(1e-14));
  CHECK(alloc.fractions[0] == 0.0);
  CHECK(alloc.fractions[1] == doctest::Approx(5.0 / 96.0).epsilon(1e-13));
  CHECK(alloc.fractions[2] == doctest::Approx(41.0 / 96.0).epsilon(1e-13));
  CHECK(alloc.fractions[3] == doctest::Approx(50.0 / 96.0).epsilon(1e-13));
  CHECK(alloc.multiplier == doctest::Approx(24.0 / 53.0).epsilon(1e-13));

  CHECK(oracle::allocation_objective(alloc.fractions, gains, 1.0) ==
        doctest::Approx(4.4561557912923648).epsilon(1e-12));
  CHECK(kkt_residual(alloc, gains, 1.0) <= 1e-10);
}

TEST_CASE("equal gains split evenly") {
  const std::vector<double> gains(5, 7.5);
  const Allocation alloc = waterfill(gains, 2.0);
  for (const double f : alloc.fractions) CHECK(f == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(kkt_residual(alloc, gains, 2.0) <= 1e-12);
}

TEST_CASE("single carriage takes the whole budget") {
  const Allocation alloc = waterfill({123.0}, 0.5);
  CHECK(alloc.fractions[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(alloc.active[0]);
}

TEST_CASE("a hopeless carriage is shut off entirely") {
  const Allocation alloc = waterfill({1e-12, 1.0}, 1.0);
  CHECK_FALSE(alloc.active[0]);
  CHECK(alloc.fractions[0] == 0.0);
  CHECK(alloc.fractions[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("waterfill matches gradient-ascent optimum on random instances") {
  std::mt19937_64 rng(0x5eed5eedULL);
  for (int instance = 0; instance < 25; ++instance) {
    const std::size_t count = 1 + static_cast<std::size_t>(uniform01(rng) * 8.0);
    std::vector<double> gains(count);
    for (double& g : gains) g = std::pow(10.0, -3.0 + 6.0 * uniform01(rng));

    const Allocation alloc = waterfill(gains, 1.0);

    double budget = 0.0;
    for (const double f : alloc.fractions) {
      CHECK(f >= 0.0);
      budget += f;
    }
    CHECK(budget == doctest::Approx(1.0).epsilon(1e-12));

    const double value = oracle::allocation_objective(alloc.fractions, gains, 1.0);
    const double reference = oracle::best_objective_by_ascent(gains, 1.0);
    CHECK(value >= reference - 1e-9 * std::abs(reference));
    CHECK(std::abs(value - reference) <= 1e-6 * std::abs(reference));
    CHECK(kkt_residual(alloc, gains, 1.0) <= 1e-8);
  }
}

TEST_CASE("equal allocation is uniform and fully active") {
  const Allocation alloc = equal_allocation(8);
  REQUIRE(alloc.fractions.size() == 8);
  for (const double f : alloc.fractions) CHECK(f == 0.125);
  for (const bool a : alloc.active) CHECK(a);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(waterfill({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill({1.0, -2.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill({1.0, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(waterfill({1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(equal_allocation(0), std::invalid_argument);
  const Allocation alloc = equal_allocation(3);
  CHECK_THROWS_AS(kkt_residual(alloc, {1.0, 2.0}, 1.0), std::invalid_argument);
}
