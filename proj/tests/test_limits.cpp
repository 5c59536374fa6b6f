#include <doctest.h>

#include <cmath>

#include "husimi/error.hpp"
#include "husimi/limits.hpp"
#include "husimi/specfun.hpp"

using namespace husimi;
using namespace husimi::limits;

namespace {
OscillatorParams sc(double a) {
  OscillatorParams p;
  p.a = a;
  return p;
}
}  // namespace

TEST_CASE("reduction_check_g0") {
  CHECK(reduction_check_g0(0, {0, 0}, sc(1.0)) <= 1e-12);
  CHECK(reduction_check_g0(3, {1.2, -0.4}, sc(0.5)) <= 1e-12);
  CHECK(reduction_check_g0(2, {-0.3, 1.9}, sc(2.0)) <= 1e-12);
  OscillatorParams f = sc(1.0);
  f.g = 0.3;
  CHECK_THROWS_AS(reduction_check_g0(0, {0, 0}, f), DomainError);
}

TEST_CASE("hermite limit series") {
  const GridSpec grid{-3, 3, -3, 3, 21, 21};
  const ConvergenceSeries s = hermite_limit_check(0, 0.0, {2, 4, 8, 12}, grid);
  REQUIRE(s.sup_differences.size() == 4);
  CHECK(s.monotone);
  CHECK(s.sup_differences.back() < 0.02);
  // Calibration values from an independent trapezoid quadrature of the definition.
  CHECK(s.sup_differences[0] == doctest::Approx(0.02989).epsilon(2e-3));
  CHECK(s.sup_differences[3] == doctest::Approx(0.00485).epsilon(5e-3));
  CHECK(hermite_limit_check(1, 1.0, {2, 4, 8, 12}, grid).monotone);
  CHECK_THROWS_AS(hermite_limit_check(0, 0.0, {4, 2}, grid), DomainError);
}

TEST_CASE("laguerre to hermite") {
  const ConvergenceSeries zero = laguerre_to_hermite_check(0, 0.3, {10, 100, 1000});
  for (double r : zero.sup_differences) CHECK(r == 0.0);
  CHECK_FALSE(zero.monotone);
  CHECK(laguerre_to_hermite_check(1, 0.5, {1e2, 1e3, 1e4}).monotone);
  // Convergence is O(alpha^{-1/2}); reference residuals from 30-digit mpmath.
  const ConvergenceSeries two = laguerre_to_hermite_check(2, -1.0, {1e4, 1e6});
  const double target = specfun::hermite(2, -1.0) / 2.0;
  CHECK(two.sup_differences[0] == doctest::Approx(0.0567685).epsilon(1e-5));
  CHECK(two.sup_differences[1] == doctest::Approx(0.00565885).epsilon(1e-4));
  CHECK(two.sup_differences[1] < 1e-2 * std::abs(target));
  CHECK(two.monotone);
}

TEST_CASE("strictly_decreasing") {
  CHECK(strictly_decreasing({3, 2, 1}));
  CHECK_FALSE(strictly_decreasing({3, 3, 1}));
  CHECK_FALSE(strictly_decreasing({1}));
}
