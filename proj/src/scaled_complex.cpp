#include "husimi/scaled_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace husimi {

double wrap_phase(double angle) {
  if (!std::isfinite(angle)) return angle;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(angle, two_pi);  // [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

ScaledComplex ScaledComplex::from_log(double log_modulus, double phase) {
  if (log_modulus == -std::numeric_limits<double>::infinity()) return zero();
  return {log_modulus, wrap_phase(phase)};
}

ScaledComplex ScaledComplex::from_complex(std::complex<double> v) {
  if (v == std::complex<double>{}) return zero();
  // hypot avoids spurious overflow for components near DBL_MAX
  return {std::log(std::hypot(v.real(), v.imag())), std::arg(v)};
}

ScaledComplex ScaledComplex::from_real(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), v < 0.0 ? std::numbers::pi : 0.0};
}

std::complex<double> ScaledComplex::to_complex() const {
  if (is_zero()) return {};
  return std::polar(std::exp(log_modulus), phase);
}

double ScaledComplex::modulus() const { return is_zero() ? 0.0 : std::exp(log_modulus); }

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& o) {
  if (is_zero() || o.is_zero()) return *this = zero();
  log_modulus += o.log_modulus;
  phase = wrap_phase(phase + o.phase);
  return *this;
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& o) {
  if (is_zero()) return *this;
  log_modulus -= o.log_modulus;
  phase = wrap_phase(phase - o.phase);
  return *this;
}

ScaledComplex ScaledComplex::times_exp(std::complex<double> w) const {
  if (is_zero()) return zero();
  return from_log(log_modulus + w.real(), phase + w.imag());
}

ScaledComplex scaled_sum(std::span<const ScaledComplex> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) top = std::max(top, t.log_modulus);
  if (top == -std::numeric_limits<double>::infinity()) return ScaledComplex::zero();

  std::complex<double> acc{};
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc += std::polar(std::exp(t.log_modulus - top), t.phase);
  }
  ScaledComplex s = ScaledComplex::from_complex(acc);
  if (s.is_zero()) return s;
  s.log_modulus += top;
  return s;
}

}  // namespace husimi
