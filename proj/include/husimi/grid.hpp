#pragma once

#include <string>
#include <vector>

#include "husimi/model.hpp"

namespace husimi {

struct GridSpec {
  double x_min = -5.0, x_max = 5.0;
  double p_min = -5.0, p_max = 5.0;
  int x_steps = 201, p_steps = 201;

  void validate() const;
  double x_at(int i) const;
  double p_at(int j) const;
  std::size_t size() const { return static_cast<std::size_t>(x_steps) * static_cast<std::size_t>(p_steps); }
};

/// Husimi values on a rectangular grid, row-major with x outer and p inner.
struct DistributionGrid {
  GridSpec spec;
  ModelKind model = ModelKind::Hermite;
  int n = 0;
  OscillatorParams params;
  double tolerance = 1e-11;  // quadrature tolerance of the D-function route
  std::string version;
  std::vector<double> values;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * spec.p_steps + j]; }
};

/// OpenMP-parallel grid evaluation. Cells are independent and written to
/// their row-major slot, so the result does not depend on the schedule.
/// The first failing cell (lowest index) is rethrown with its indices.
DistributionGrid husimi_grid(ModelKind model, int n, const GridSpec& grid,
                             const OscillatorParams& params);

/// Single-threaded reference for husimi_grid.
DistributionGrid husimi_grid_serial(ModelKind model, int n, const GridSpec& grid,
                                    const OscillatorParams& params);

}  // namespace husimi
