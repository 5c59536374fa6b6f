#include <doctest.h>

#include <cmath>
#include <numbers>

#include "husimi/error.hpp"
#include "husimi/grid.hpp"
#include "husimi/husimi.hpp"

using namespace husimi;

TEST_CASE("GridSpec") {
  GridSpec g{-1.0, 2.0, -3.0, 0.1, 4, 7};
  CHECK_NOTHROW(g.validate());
  CHECK(g.x_at(0) == -1.0);
  CHECK(g.x_at(3) == 2.0);
  CHECK(g.p_at(6) == 0.1);
  CHECK(g.size() == 28);
  CHECK_THROWS_AS((GridSpec{1, 1, 0, 1, 3, 3}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{0, 1, 0, 1, 1, 3}.validate()), DomainError);
  CHECK_THROWS_AS((GridSpec{0, INFINITY, 0, 1, 3, 3}.validate()), DomainError);
}

TEST_CASE("2x2 grid equals pointwise calls") {
  OscillatorParams p;
  const GridSpec g{-1, 1, -0.5, 0.5, 2, 2};
  const DistributionGrid w = husimi_grid(ModelKind::Hermite, 0, g, p);
  const DerivedParams dp = derive(p);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(w.at(i, j) == husimi_hermite(0, {g.x_at(i), g.p_at(j)}, p, dp));
  CHECK(w.version == HUSIMI_VERSION);
}

TEST_CASE("parallel grid is bitwise equal to the serial reference") {
  for (double a : {0.5, 12.0})
    for (int n : {0, 2}) {
      OscillatorParams p;
      p.a = a;
      p.g = 1.0;
      const GridSpec g{-3, 3, -3, 3, 13, 11};
      const DistributionGrid par = husimi_grid(ModelKind::Semiconfined, n, g, p);
      const DistributionGrid ser = husimi_grid_serial(ModelKind::Semiconfined, n, g, p);
      REQUIRE(par.values.size() == ser.values.size());
      for (std::size_t k = 0; k < par.values.size(); ++k) CHECK(par.values[k] == ser.values[k]);
    }
}

TEST_CASE("figure parameter set obeys the bound and holds most of the mass in a finite box") {
  OscillatorParams p;
  p.a = 0.5;
  const GridSpec g{-6, 34, -6, 6, 401, 121};
  const DistributionGrid w = husimi_grid(ModelKind::Semiconfined, 0, g, p);
  double peak = 0.0, sum = 0.0;
  for (double v : w.values) {
    peak = std::max(peak, v);
    sum += v;
  }
  CHECK(peak <= 1.0 / std::numbers::pi);
  // At b^2 = 1/4 the momentum tail falls off only like |p|^{-5/2}, so the box holds about 98.6%.
  const double cell = (g.x_max - g.x_min) / (g.x_steps - 1) * (g.p_max - g.p_min) / (g.p_steps - 1);
  CHECK(sum * cell > 0.98);
  CHECK(sum * cell < 1.0);
}

TEST_CASE("grid argument errors") {
  OscillatorParams p;
  CHECK_THROWS_AS(husimi_grid(ModelKind::Semiconfined, 0, GridSpec{}, p), DomainError);
  CHECK_THROWS_AS(husimi_grid(ModelKind::Hermite, -1, GridSpec{}, p), DomainError);
}
