#include <doctest.h>

#include "hstbeam/grid.hpp"

using hstbeam::Grid;

TEST_CASE("grid stores row-major cells with span access") {
  Grid<int> g(2, 3, 7);
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 3);
  CHECK(g(1, 2) == 7);

  g(0, 1) = 42;
  CHECK(g(0, 1) == 42);

  auto row = g.row(1);
  REQUIRE(row.size() == 3);
  row[0] = -1;
  CHECK(g(1, 0) == -1);

  const Grid<int>& view = g;
  CHECK(view.row(0)[1] == 42);
}

TEST_CASE("grids compare by shape and contents") {
  Grid<int> a(2, 2, 0);
  Grid<int> b(2, 2, 0);
  CHECK(a == b);
  b(1, 1) = 5;
  CHECK(a != b);
  const Grid<int> c(4, 1, 0);
  CHECK(a != c);
}
