#include "husimi/limits.hpp"

#include <algorithm>
#include <cmath>

#include "husimi/error.hpp"
#include "husimi/husimi.hpp"
#include "husimi/specfun.hpp"

namespace husimi::limits {

bool strictly_decreasing(const std::vector<double>& v) {
  if (v.size() < 2) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

double reduction_check_g0(int n, const PhasePoint& pt, const OscillatorParams& params) {
  if (params.g != 0.0) throw DomainError("reduction_check_g0 requires g = 0");
  check_model(ModelKind::Semiconfined, params);
  const DerivedParams dp = derive(params);
  const double general_sum = forms::semiconfined_double_sum(n, pt, params, dp).value;
  const double special = forms::semiconfined_double_sum_g0(n, pt, params, dp).value;
  auto rel = [](double u, double v) {
    const double s = std::max(std::abs(u), std::abs(v));
    return s == 0.0 ? 0.0 : std::abs(u - v) / s;
  };
  double worst = rel(general_sum, special);
  if (n == 0) worst = std::max(worst, rel(forms::semiconfined_ground(pt, params, dp), special));
  return worst;
}

ConvergenceSeries hermite_limit_check(int n, double g, const std::vector<double>& a_values,
                                      const GridSpec& grid, const OscillatorParams& params) {
  for (std::size_t i = 0; i < a_values.size(); ++i)
    if (i > 0 && !(a_values[i] > a_values[i - 1]))
      throw DomainError("a_values must be strictly increasing");
  OscillatorParams base = params;
  base.g = g;
  base.a = std::numeric_limits<double>::infinity();
  const DistributionGrid reference = husimi_grid(ModelKind::Hermite, n, grid, base);

  ConvergenceSeries out;
  out.parameters = a_values;
  for (double a : a_values) {
    OscillatorParams sc = base;
    sc.a = a;
    const DistributionGrid w = husimi_grid(ModelKind::Semiconfined, n, grid, sc);
    double sup = 0.0;
    for (std::size_t k = 0; k < w.values.size(); ++k)
      sup = std::max(sup, std::abs(w.values[k] - reference.values[k]));
    out.sup_differences.push_back(sup);
  }
  out.monotone = strictly_decreasing(out.sup_differences);
  return out;
}

ConvergenceSeries laguerre_to_hermite_check(int n, double x, const std::vector<double>& alpha_values) {
  if (n < 0) throw DomainError("n must be nonnegative");
  const double target = (n % 2 ? -1.0 : 1.0) * specfun::hermite(n, x) / std::tgamma(n + 1.0);
  ConvergenceSeries out;
  out.parameters = alpha_values;
  for (double alpha : alpha_values) {
    if (!(alpha > 0.0)) throw DomainError("alpha values must be positive");
    const double lag = specfun::laguerre(n, alpha, std::sqrt(2.0 * alpha) * x + alpha);
    out.sup_differences.push_back(std::abs(std::pow(2.0 / alpha, 0.5 * n) * lag - target));
  }
  out.monotone = strictly_decreasing(out.sup_differences);
  return out;
}

}  // namespace husimi::limits
