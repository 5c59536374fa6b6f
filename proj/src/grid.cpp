#include "husimi/grid.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <string>

#include "husimi/error.hpp"
#include "husimi/husimi.hpp"

namespace husimi {

void GridSpec::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(p_min) || !std::isfinite(p_max))
    throw DomainError("grid bounds must be finite");
  if (!(x_min < x_max) || !(p_min < p_max)) throw DomainError("grid bounds must satisfy min < max");
  if (x_steps < 2 || p_steps < 2) throw DomainError("grid needs at least 2 steps per axis");
}

double GridSpec::x_at(int i) const {
  return i == x_steps - 1 ? x_max : x_min + (x_max - x_min) * i / (x_steps - 1);
}

double GridSpec::p_at(int j) const {
  return j == p_steps - 1 ? p_max : p_min + (p_max - p_min) * j / (p_steps - 1);
}

namespace {

DistributionGrid make_grid(ModelKind model, int n, const GridSpec& grid, const OscillatorParams& params) {
  grid.validate();
  check_model(model, params);
  if (n < 0) throw DomainError("state index must be nonnegative");
  DistributionGrid out;
  out.spec = grid;
  out.model = model;
  out.n = n;
  out.params = params;
  out.version = HUSIMI_VERSION;
  out.values.assign(grid.size(), 0.0);
  return out;
}

[[noreturn]] void rethrow_at_cell(const std::exception_ptr& error, int i, int j) {
  const std::string where = " at cell (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  try {
    std::rethrow_exception(error);
  } catch (const AccuracyError& e) {
    throw AccuracyError(e.what() + where, e.residual());
  } catch (const DomainError& e) {
    throw DomainError(e.what() + where);
  }
}

}  // namespace

DistributionGrid husimi_grid(ModelKind model, int n, const GridSpec& grid, const OscillatorParams& params) {
  DistributionGrid out = make_grid(model, n, grid, params);
  const DerivedParams dp = derive(params);
  const std::int64_t cells = static_cast<std::int64_t>(grid.size());

  std::int64_t failed_cell = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t c = 0; c < cells; ++c) {
    const int i = static_cast<int>(c / grid.p_steps);
    const int j = static_cast<int>(c % grid.p_steps);
    try {
      out.values[static_cast<std::size_t>(c)] =
          husimi_value(model, n, {grid.x_at(i), grid.p_at(j)}, params, dp);
    } catch (...) {
#pragma omp critical(husimi_grid_failure)
      if (c < failed_cell) {
        failed_cell = c;
        failure = std::current_exception();
      }
    }
  }

  if (failure) rethrow_at_cell(failure, static_cast<int>(failed_cell / grid.p_steps),
                               static_cast<int>(failed_cell % grid.p_steps));
  return out;
}

DistributionGrid husimi_grid_serial(ModelKind model, int n, const GridSpec& grid,
                                    const OscillatorParams& params) {
  DistributionGrid out = make_grid(model, n, grid, params);
  const DerivedParams dp = derive(params);
  for (int i = 0; i < grid.x_steps; ++i) {
    for (int j = 0; j < grid.p_steps; ++j) {
      try {
        out.values[static_cast<std::size_t>(i) * grid.p_steps + j] =
            husimi_value(model, n, {grid.x_at(i), grid.p_at(j)}, params, dp);
      } catch (...) {
        rethrow_at_cell(std::current_exception(), i, j);
      }
    }
  }
  return out;
}

}  // namespace husimi
