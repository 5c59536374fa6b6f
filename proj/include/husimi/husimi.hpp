#pragma once

// Closed-form Husimi distributions. Both models go through an amplitude Q
// with W = lambda0 / (2 pi hbar sqrt(pi)) |Q|^2, which keeps W real and
// nonnegative by construction.

#include "husimi/model.hpp"
#include "husimi/scaled_complex.hpp"

namespace husimi {

/// Amplitude of the ordinary oscillator with field:
/// (C_N0 sqrt(2^n n!))^{-1} (Delta - i eta)^n exp(-(Delta^2 + eta^2)/4 + i delta eta / 2).
ScaledComplex q_amp_hermite(int n, const PhasePoint& pt, const DerivedParams& dp);

/// W_Nn^g(p, x) = E^n e^{-E} / (2 pi hbar n!) with
/// E = (p^2/2m0 + m0 omega^2 x^2/2 + g x + g^2/(2 m0 omega^2)) / (hbar omega).
double husimi_hermite(int n, const PhasePoint& pt, const OscillatorParams& params,
                      const DerivedParams& dp);

/// Semiconfined amplitude as a finite sum of parabolic cylinder functions
/// D_{-(b^2+k+1)}(z), k = 0..n. Every Gamma-weighted factor is formed in
/// log space and the k-sum is rescaled by its largest term.
ScaledComplex q_amp_semiconfined(int n, const PhasePoint& pt, const OscillatorParams& params,
                                 const DerivedParams& dp);

double husimi_semiconfined(int n, const PhasePoint& pt, const OscillatorParams& params,
                           const DerivedParams& dp);

/// lambda0 / (2 pi hbar sqrt(pi)) |q|^2.
double husimi_from_amplitude(const ScaledComplex& q, const DerivedParams& dp);

/// Dispatch on the model; `kind` must agree with params.
double husimi_value(ModelKind kind, int n, const PhasePoint& pt, const OscillatorParams& params,
                    const DerivedParams& dp);

/// Printed alternative forms of the same distributions, kept for
/// equivalence checks against the amplitude route.
namespace forms {

struct DoubleSum {
  double value = 0.0;
  /// |Im| / |Re| of the double sum; zero up to rounding.
  double imag_residue = 0.0;
  /// sum |terms| / |sum|; rounding in the D values is amplified by this much.
  double condition = 1.0;
};

/// Double sum over products of D functions at conjugate arguments, any g.
DoubleSum semiconfined_double_sum(int n, const PhasePoint& pt, const OscillatorParams& params,
                                  const DerivedParams& dp);

/// The same double sum written for g = 0 (g0 = 1); requires params.g == 0.
DoubleSum semiconfined_double_sum_g0(int n, const PhasePoint& pt, const OscillatorParams& params,
                                     const DerivedParams& dp);

/// Ground-state product form D(w) D(conj w) with the field offset exponent.
double semiconfined_ground(const PhasePoint& pt, const OscillatorParams& params,
                           const DerivedParams& dp);

/// Field-free ordinary oscillator, E = (p^2/2m0 + m0 omega^2 x^2/2) / (hbar omega).
double hermite_field_free(int n, const PhasePoint& pt, const OscillatorParams& params);

}  // namespace forms

}  // namespace husimi
