#pragma once

#include <complex>
#include <limits>
#include <span>

namespace husimi {

/// Complex number held as (ln|v|, arg v). Products and quotients never
/// overflow; a zero value has log_modulus = -inf and phase = 0.
struct ScaledComplex {
  double log_modulus = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static ScaledComplex zero() { return {}; }
  static ScaledComplex from_log(double log_modulus, double phase);
  static ScaledComplex from_complex(std::complex<double> v);
  static ScaledComplex from_real(double v);

  bool is_zero() const { return log_modulus == -std::numeric_limits<double>::infinity(); }

  /// Materialize; overflows to inf / underflows to 0 like std::exp.
  std::complex<double> to_complex() const;
  double modulus() const;

  ScaledComplex conj() const { return from_log(log_modulus, -phase); }
  ScaledComplex& operator*=(const ScaledComplex& o);
  ScaledComplex& operator/=(const ScaledComplex& o);
  /// Multiply by e^{w}.
  ScaledComplex times_exp(std::complex<double> w) const;

  friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
  friend ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
};

/// Wrap an angle into (-pi, pi].
double wrap_phase(double angle);

/// Sum with max-log rescaling: every term is divided by the largest modulus
/// before accumulation, so terms spanning hundreds of nats add safely.
ScaledComplex scaled_sum(std::span<const ScaledComplex> terms);

}  // namespace husimi
