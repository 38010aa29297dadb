#include <doctest.h>

#include "quadrature.hpp"

TEST_CASE("circle moments against the trapezoid rule") {
  CHECK(quad::indices(2, 8).size() == 45);
  CHECK(quad::max_moment_error(2) <= 1e-12);
  CHECK(quad::circle_mean({2, 2}) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("sphere moments against product Gauss quadrature") {
  CHECK(quad::indices(3, 8).size() == 165);
  CHECK(quad::max_moment_error(3) <= 1e-10);
  CHECK(quad::sphere_mean({2, 0, 0}) == doctest::Approx(1.0 / 3).epsilon(1e-10));
}
