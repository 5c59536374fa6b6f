#pragma once

// Independent numerical verification. Everything here integrates the
// defining expressions directly with Boost.Math Gauss-Kronrod quadrature
// and never goes through the parabolic-cylinder closed forms.

#include <complex>
#include <string>

#include "husimi/grid.hpp"
#include "husimi/model.hpp"
#include "husimi/scaled_complex.hpp"

namespace husimi::oracle {

struct QuadratureControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Smoothing envelope is cut where it drops below this fraction of its peak.
  double envelope_cut = 1e-18;
  /// Normalization window covers the distribution down to this fraction of its peak.
  double mass_cut = 1e-12;

  void validate() const;
};

struct VerificationReport {
  std::string name;
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  long points_tested = 0;
  bool pass = false;
  std::string notes;
};

/// W(p, x) = (2 pi)^{-3/2} (hbar dx)^{-1} |int psi_n(x') e^{-i p x'/hbar - (x-x')^2/(4 dx^2)} dx'|^2
/// with dx^2 = hbar/(2 m0 omega).
double husimi_quadrature(ModelKind model, int n, const PhasePoint& pt,
                         const OscillatorParams& params, const QuadratureControl& ctl = {});

/// The amplitude int psi_n(x') e^{-i p x'/hbar - lambda0^2 (x-x')^2 / 2} dx'.
std::complex<double> amplitude_quadrature(ModelKind model, int n, const PhasePoint& pt,
                                          const OscillatorParams& params,
                                          const QuadratureControl& ctl = {});

/// Closed form against husimi_quadrature at every grid cell with x > -a;
/// passes when |closed - quad| <= tolerance * max(1, closed) everywhere.
/// The notes also record whether every closed-form value is finite and
/// within [0, 1/(pi hbar) + 1e-12].
VerificationReport closed_form_check(ModelKind model, int n, const OscillatorParams& params,
                                     const GridSpec& grid, const QuadratureControl& ctl = {},
                                     double tolerance = 1e-8);

/// <psi_m, psi_n> by quadrature; passes when |overlap - delta_mn| <= tolerance.
VerificationReport orthonormality_check(ModelKind model, int m, int n, const OscillatorParams& params,
                                        const QuadratureControl& ctl = {}, double tolerance = 1e-8);

/// int_0^inf y^{alpha-1} e^{-y^2/2 - q y} dy against Gamma(alpha) e^{q^2/4} D_{-alpha}(q).
/// Where the 1F1 route applies, its agreement with the integral route is
/// folded into the same report.
VerificationReport table_integral_check(double alpha, std::complex<double> q,
                                        const QuadratureControl& ctl = {}, double tolerance = 1e-10);

/// Raw quadrature of the table integral, returned in scaled form.
ScaledComplex table_integral_quadrature(double alpha, std::complex<double> q,
                                        const QuadratureControl& ctl = {});

/// Iterated 2-D quadrature (p inner, x outer) of the closed-form W over a
/// window grown until its edges fall below mass_cut of the peak.
VerificationReport normalization_check(ModelKind model, int n, const OscillatorParams& params,
                                       const QuadratureControl& ctl = {}, double tolerance = 1e-4);

}  // namespace husimi::oracle
