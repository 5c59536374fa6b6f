#include "husimi/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "husimi/error.hpp"

namespace husimi::specfun {

namespace {

// Stirling series for ln Gamma(x), accurate to ~1e-20 for x >= 15.
double stirling_log_gamma(double x) {
  constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
  // B_{2k} / (2k (2k-1)), k = 1..8
  constexpr double c[] = {1.0 / 12.0,       -1.0 / 360.0,         1.0 / 1260.0,
                          -1.0 / 1680.0,    1.0 / 1188.0,         -691.0 / 360360.0,
                          1.0 / 156.0,      -3617.0 / 122400.0};
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (int k = 7; k >= 0; --k) series = series * inv2 + c[k];
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series * inv;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  if (x < 1e-8) return -std::log(x) - std::numbers::egamma * x;
  if (x < 15.0) return std::log(std::tgamma(x));
  return stirling_log_gamma(x);
}

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 170.0) return std::exp(-log_gamma(x));
  return 1.0 / std::tgamma(x);
}

double log_pochhammer(double a, int k) {
  if (!(a > 0.0)) throw DomainError("log_pochhammer: base must be positive");
  if (k < 0) throw DomainError("log_pochhammer: negative length");
  if (k > 4096) return log_gamma(a + k) - log_gamma(a);
  // Running product, flushed into the log before it can overflow; products of
  // small integers stay exact.
  double log_sum = 0.0;
  double product = 1.0;
  for (int i = 0; i < k; ++i) {
    product *= a + i;
    if (product > 1e250) {
      log_sum += std::log(product);
      product = 1.0;
    }
  }
  return log_sum + std::log(product);
}

SignedLog negative_pochhammer(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("negative_pochhammer: n and k must be nonnegative");
  if (k > n) return {0, -std::numeric_limits<double>::infinity()};
  constexpr double exact_limit = 9007199254740992.0;  // 2^53
  double product = 1.0;
  double log_sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double factor = static_cast<double>(n - i);
    if (product * factor > exact_limit) {
      log_sum += std::log(product);
      product = 1.0;
    }
    product *= factor;
  }
  return {k % 2 == 0 ? 1 : -1, log_sum + std::log(product)};
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: negative degree");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Neumaier-compensated Maclaurin sum of 1F1.
std::complex<double> kummer_series(double a, double b, std::complex<double> z,
                                   const SeriesControl& ctl) {
  double sum_re = 1.0, sum_im = 0.0, comp_re = 0.0, comp_im = 0.0;
  auto add = [](double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  };

  std::complex<double> term = 1.0;
  int small_run = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const std::complex<double> next = term * ((a + k) / (b + k)) * z / (k + 1.0);
    add(sum_re, comp_re, next.real());
    add(sum_im, comp_im, next.imag());
    const double total = std::hypot(sum_re + comp_re, sum_im + comp_im);
    const bool shrinking = std::abs(next) <= std::abs(term);
    if (std::abs(next) <= ctl.rel_tol * total && shrinking) {
      if (++small_run == 3) return {sum_re + comp_re, sum_im + comp_im};
    } else {
      small_run = 0;
    }
    term = next;
  }
  const double total = std::hypot(sum_re + comp_re, sum_im + comp_im);
  throw AccuracyError("kummer_1f1: series did not converge",
                      std::abs(term) / std::max(total, 1e-300));
}

}  // namespace

std::complex<double> kummer_1f1(double a, double b, std::complex<double> z,
                                const SeriesControl& ctl) {
  if (b <= 0.0 && b == std::floor(b)) throw DomainError("kummer_1f1: b is a non-positive integer");
  if (!(ctl.rel_tol > 0.0) || ctl.max_terms < 1) throw DomainError("kummer_1f1: invalid SeriesControl");
  if (z == std::complex<double>{}) return 1.0;
  if (z.real() < 0.0) return std::exp(z) * kummer_series(b - a, b, -z, ctl);
  return kummer_series(a, b, z, ctl);
}

}  // namespace husimi::specfun
