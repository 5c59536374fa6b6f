#pragma once

// Globally adaptive 10-point Gauss / 21-point Kronrod quadrature (QUADPACK
// QAG strategy) for real- or complex-valued integrands on a finite interval.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

#include "husimi/error.hpp"

namespace husimi::quad {

template <typename T>
struct QuadResult {
  T value{};
  double abs_error = 0.0;
  /// Integral of |f|, the scale against which round-off is judged.
  double l1 = 0.0;
  std::size_t intervals = 0;
};

namespace detail {

// Abscissae of the 21-point Kronrod rule (positive half, descending); the
// odd-indexed ones are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600045349943, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
  double lo, hi;
  T value;
  double error;
  double l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename T, typename F>
Panel<T> gk21(F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T kronrod = fc * kWgk[10];
  T gauss{};
  double l1 = std::abs(half) * magnitude(fc) * kWgk[10];
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[j];
    l1 += std::abs(half) * (magnitude(f1) + magnitude(f2)) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  double err = magnitude(kronrod - gauss);
  // QUADPACK error scaling: the raw |K - G| grossly overestimates smooth panels.
  if (err != 0.0) err = std::min(err, std::pow(200.0 * err, 1.5) / std::sqrt(std::max(l1, 1e-300)));
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * l1);
  return {lo, hi, kronrod, err, l1};
}

}  // namespace detail

/// Integrate f over [lo, hi]. Panels wider than max_step are split before
/// adaptivity starts. Converged when the summed error estimate is below
/// rel_tol * |value| or at the round-off floor of the integrand's L1 mass.
template <typename T, typename F>
QuadResult<T> integrate(F&& f, double lo, double hi, double rel_tol,
                        std::size_t max_intervals = 2000,
                        double max_step = std::numeric_limits<double>::infinity()) {
  std::priority_queue<detail::Panel<T>> heap;
  std::size_t initial = 1;
  if (std::isfinite(max_step) && max_step > 0.0)
    initial = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / max_step)));
  if (initial > max_intervals) throw AccuracyError("quadrature: step bound needs too many panels", 0.0);

  T total{};
  double total_err = 0.0, total_l1 = 0.0;
  const double width = (hi - lo) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = i + 1 == initial ? hi : a + width;
    auto p = detail::gk21<T>(f, a, b);
    total += p.value;
    total_err += p.error;
    total_l1 += p.l1;
    heap.push(p);
  }

  auto converged = [&] {
    return total_err <= std::max(rel_tol * detail::magnitude(total),
                                 100.0 * std::numeric_limits<double>::epsilon() * total_l1);
  };

  while (!converged()) {
    if (heap.size() >= max_intervals) {
      throw AccuracyError("quadrature did not converge",
                          total_err / std::max(detail::magnitude(total), 1e-300));
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::gk21<T>(f, worst.lo, mid);
    auto right = detail::gk21<T>(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels so incremental updates leave no drift.
  QuadResult<T> out;
  out.intervals = heap.size();
  while (!heap.empty()) {
    const auto& p = heap.top();
    out.value += p.value;
    out.abs_error += p.error;
    out.l1 += p.l1;
    heap.pop();
  }
  return out;
}

}  // namespace husimi::quad
