#include <doctest.h>

#include <initializer_list>

#include "hstbeam/channel.hpp"

using hstbeam::effective_gain;
using hstbeam::path_gain;

TEST_CASE("path gain is pinned to one at a metre") {
  CHECK(path_gain(1.0, 2.0) == 1.0);
  CHECK(path_gain(1.0, 3.0) == 1.0);
  CHECK(path_gain(1.0, 5.0) == 1.0);
}

TEST_CASE("path gain follows the half-exponent law") {
  CHECK(path_gain(100.0, 3.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(path_gain(100.0, 2.0) == doctest::Approx(1e-2).epsilon(1e-12));
  CHECK(path_gain(4.0, 2.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("effective gain frozen value at the closest-approach range") {
  // d = 50 m, alpha = 3, noise at the default floor.
  CHECK(effective_gain(50.0, 3.0, 3.9810717055349693e-14) ==
        doctest::Approx(200950914.52076656).epsilon(1e-12));
}

TEST_CASE("effective gain decays with range and grows with quieter noise") {
  const double noise = 3.9810717055349693e-14;
  double previous = effective_gain(50.0, 3.0, noise);
  for (const double d : {60.0, 120.0, 300.0, 501.0}) {
    const double g = effective_gain(d, 3.0, noise);
    CHECK(g < previous);
    previous = g;
  }
  CHECK(effective_gain(100.0, 3.0, noise / 10.0) ==
        doctest::Approx(10.0 * effective_gain(100.0, 3.0, noise)).epsilon(1e-12));
}
