#pragma once

// Special functions needed by the oscillator models, evaluated so that the
// extreme orders of the semiconfined model (b^2 ~ 144) neither overflow nor
// lose their sign.

#include <complex>
#include <cstdint>

#include "husimi/scaled_complex.hpp"

namespace husimi::specfun {

struct SeriesControl {
  double rel_tol = 1e-13;
  int max_terms = 10000;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// 1 / Gamma(x) for real x; exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// ln[(a)_k] for a > 0.
double log_pochhammer(double a, int k);

/// (-n)_k = (-n)(-n+1)...(-n+k-1) with exact sign. The magnitude is an exact
/// integer while it fits in 53 bits and a log-sum otherwise.
struct SignedLog {
  int sign = 1;  // -1, 0 or +1
  double log_abs = 0.0;
};
SignedLog negative_pochhammer(int n, int k);

/// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), alpha > -1.
double laguerre(int n, double alpha, double x);

/// Kummer's 1F1(a; b; z) by its Maclaurin series. Arguments with Re z < 0
/// go through Kummer's transformation so the summed terms do not alternate.
std::complex<double> kummer_1f1(double a, double b, std::complex<double> z,
                                const SeriesControl& ctl = {});

/// Parabolic cylinder function D_nu(z) for real nu <= 1.
/// nu < 0 uses the integral route; 0 <= nu <= 1 the 1F1 route.
ScaledComplex pcf_d(double nu, std::complex<double> z);

/// D_{-alpha}(z) = e^{-z^2/4} / Gamma(alpha) * int_0^inf y^{alpha-1} e^{-y^2/2 - z y} dy,
/// integrated adaptively in log space with the peak subtracted.
ScaledComplex pcf_d_integral(double nu, std::complex<double> z, double rel_tol = 1e-11);

/// D_nu(z) from the two-1F1 definition, summed in 100-digit arithmetic to
/// survive the cancellation between the two branches. Requires |z| <= 8 and
/// |nu| <= 30; throws AccuracyError if the estimated loss exceeds 1e-12.
ScaledComplex pcf_d_series(double nu, std::complex<double> z);

/// int_0^inf y^{alpha-1} e^{-y^2/2 - q y} dy in scaled form (the raw table
/// integral that pcf_d_integral normalizes).
ScaledComplex table_integral(double alpha, std::complex<double> q, double rel_tol = 1e-11);

}  // namespace husimi::specfun
