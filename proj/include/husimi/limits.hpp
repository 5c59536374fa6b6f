#pragma once
// Numerical checks of the reductions between the two oscillator families.
#include <vector>

#include "husimi/grid.hpp"
#include "husimi/model.hpp"

namespace husimi::limits {

struct ConvergenceSeries {
  std::vector<double> parameters;
  std::vector<double> sup_differences;
  /// True when every successive entry is strictly smaller.
  bool monotone = false;
};

bool strictly_decreasing(const std::vector<double>& v);

/// Relative difference between the general-g double sum at g = 0 and the
/// g = 0 double sum; for n = 0 also the ground-state product form.
double reduction_check_g0(int n, const PhasePoint& pt, const OscillatorParams& params);

/// Sup over the grid of |W_sc(a) - W_hermite| for each a in a_values.
ConvergenceSeries hermite_limit_check(int n, double g, const std::vector<double>& a_values,
                                      const GridSpec& grid, const OscillatorParams& params = {});

/// |(2/alpha)^{n/2} L_n^{(alpha)}(sqrt(2 alpha) x + alpha) - (-1)^n H_n(x) / n!| per alpha.
ConvergenceSeries laguerre_to_hermite_check(int n, double x, const std::vector<double>& alpha_values);

}  // namespace husimi::limits
