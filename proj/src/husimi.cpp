#include "husimi/husimi.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "husimi/error.hpp"
#include "husimi/specfun.hpp"

namespace husimi {

namespace {

double log_factorial(int n) { return specfun::log_gamma(n + 1.0); }

void require_state(int n) {
  if (n < 0) throw DomainError("state index must be nonnegative");
}

// W = E^n e^{-E} / (2 pi hbar n!)
double hermite_energy_form(int n, double energy, double hbar) {
  energy = std::max(energy, 0.0);
  const double log_norm = -std::log(2.0 * std::numbers::pi * hbar) - log_factorial(n);
  if (n == 0) return std::exp(log_norm - energy);
  if (energy == 0.0) return 0.0;
  return std::exp(log_norm + n * std::log(energy) - energy);
}

// Coefficient c_k = (-n)_k (b^2+1)_k / ((2b^2+1)_k k!) (2 b g0)^k shared by
// the double-sum forms, as (sign, ln|c_k|).
specfun::SignedLog double_sum_coefficient(int n, int k, double b2, double log_2bg0) {
  const auto falling = specfun::negative_pochhammer(n, k);
  return {falling.sign, falling.log_abs + specfun::log_pochhammer(b2 + 1.0, k) -
                            specfun::log_pochhammer(2.0 * b2 + 1.0, k) - log_factorial(k) +
                            k * log_2bg0};
}

// sum_{k,s} c_k c_s D_{-(b^2+k+1)}(w) D_{-(b^2+s+1)}(conj w), rescaled by
// the largest product.
forms::DoubleSum pcf_double_sum(int n, double b2, double log_2bg0, std::complex<double> w,
                                double log_prefactor) {
  std::vector<ScaledComplex> d_w, d_wbar;
  std::vector<specfun::SignedLog> coeff;
  for (int k = 0; k <= n; ++k) {
    const double order = -(b2 + k + 1.0);
    d_w.push_back(specfun::pcf_d(order, w));
    d_wbar.push_back(specfun::pcf_d(order, std::conj(w)));
    coeff.push_back(double_sum_coefficient(n, k, b2, log_2bg0));
  }
  std::vector<ScaledComplex> products;
  for (int k = 0; k <= n; ++k) {
    for (int s = 0; s <= n; ++s) {
      const double sign = coeff[k].sign * coeff[s].sign;
      auto t = d_w[k] * d_wbar[s];
      t = t.times_exp({coeff[k].log_abs + coeff[s].log_abs, sign < 0 ? std::numbers::pi : 0.0});
      products.push_back(t);
    }
  }
  const ScaledComplex total = scaled_sum(products);
  if (total.is_zero()) return {};
  const std::complex<double> unit = std::polar(1.0, total.phase);
  forms::DoubleSum out;
  out.value = std::exp(log_prefactor + total.log_modulus) * unit.real();
  out.imag_residue = unit.real() == 0.0 ? INFINITY : std::abs(unit.imag() / unit.real());
  double top = -INFINITY;
  for (const auto& t : products) top = std::max(top, t.log_modulus);
  double mass = 0.0;
  for (const auto& t : products) mass += std::exp(t.log_modulus - top);
  out.condition = std::exp(top + std::log(mass) - total.log_modulus);
  return out;
}

}  // namespace

ScaledComplex q_amp_hermite(int n, const PhasePoint& pt, const DerivedParams& dp) {
  require_state(n);
  const PointKinematics k = kinematics(pt, dp);
  const std::complex<double> beta(k.Delta, -k.eta);
  const double log_c_n0 = 0.25 * std::log(dp.lambda0 * dp.lambda0 / std::numbers::pi);
  const double log_norm = -log_c_n0 - 0.5 * (n * std::numbers::ln2 + log_factorial(n));
  const double gauss = -0.25 * (k.Delta * k.Delta + k.eta * k.eta);
  const double chirp = 0.5 * k.delta * k.eta;
  if (n == 0) return ScaledComplex::from_log(log_norm + gauss, chirp);
  const ScaledComplex power = ScaledComplex::from_complex(beta);
  if (power.is_zero()) return ScaledComplex::zero();
  return ScaledComplex::from_log(log_norm + gauss + n * power.log_modulus,
                                 chirp + n * power.phase);
}

double husimi_hermite(int n, const PhasePoint& pt, const OscillatorParams& params,
                      const DerivedParams& dp) {
  require_state(n);
  (void)dp;
  const auto& [m0, omega, hbar, a, g] = params;
  (void)a;
  const double mw2 = m0 * omega * omega;
  const double energy =
      (pt.p * pt.p / (2.0 * m0) + 0.5 * mw2 * pt.x * pt.x + g * pt.x + g * g / (2.0 * mw2)) /
      (hbar * omega);
  return hermite_energy_form(n, energy, hbar);
}

ScaledComplex q_amp_semiconfined(int n, const PhasePoint& pt, const OscillatorParams& params,
                                 const DerivedParams& dp) {
  require_state(n);
  if (!params.semiconfined()) throw DomainError("semiconfined amplitude needs a finite a");
  const PointKinematics kin = kinematics(pt, dp);
  const double b = dp.b;
  const double b2 = b * b;
  const double log_2bg0 = std::log(2.0 * b * dp.g0);
  const std::complex<double> z(kin.z_re, kin.z_im);

  // (2bg0)^{b^2+1/2} (lambda0 Gamma(2b^2+1))^{-1/2} sqrt((2b^2+1)_n / n!)
  const double log_prefactor = (b2 + 0.5) * log_2bg0 -
                               0.5 * (std::log(dp.lambda0) + specfun::log_gamma(2.0 * b2 + 1.0)) +
                               0.5 * (specfun::log_pochhammer(2.0 * b2 + 1.0, n) - log_factorial(n));

  std::vector<ScaledComplex> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto falling = specfun::negative_pochhammer(n, k);
    const double log_weight = falling.log_abs - specfun::log_pochhammer(2.0 * b2 + 1.0, k) -
                              log_factorial(k) + k * log_2bg0 + specfun::log_gamma(b2 + k + 1.0);
    const ScaledComplex d = specfun::pcf_d(-(b2 + k + 1.0), z);
    terms.push_back(d.times_exp({log_weight, falling.sign < 0 ? std::numbers::pi : 0.0}));
  }
  ScaledComplex sum = scaled_sum(terms);
  if (sum.is_zero()) return sum;

  const std::complex<double> exponent = 0.25 * z * z + std::complex<double>(kin.beta0_re, kin.beta0_im);
  const double sign_phase = n % 2 == 1 ? std::numbers::pi : 0.0;
  return sum.times_exp({log_prefactor + exponent.real(), exponent.imag() + sign_phase});
}

double husimi_from_amplitude(const ScaledComplex& q, const DerivedParams& dp) {
  if (q.is_zero()) return 0.0;
  const double log_norm = std::log(dp.lambda0 / (2.0 * std::numbers::pi * dp.hbar * std::sqrt(std::numbers::pi)));
  return std::exp(log_norm + 2.0 * q.log_modulus);
}

double husimi_semiconfined(int n, const PhasePoint& pt, const OscillatorParams& params,
                           const DerivedParams& dp) {
  return husimi_from_amplitude(q_amp_semiconfined(n, pt, params, dp), dp);
}

double husimi_value(ModelKind kind, int n, const PhasePoint& pt, const OscillatorParams& params,
                    const DerivedParams& dp) {
  check_model(kind, params);
  return kind == ModelKind::Hermite ? husimi_hermite(n, pt, params, dp)
                                    : husimi_semiconfined(n, pt, params, dp);
}

namespace forms {

DoubleSum semiconfined_double_sum(int n, const PhasePoint& pt, const OscillatorParams& params,
                                  const DerivedParams& dp) {
  require_state(n);
  if (!params.semiconfined()) throw DomainError("double sum needs a finite a");
  const double b = dp.b, b2 = b * b, g0 = dp.g0;
  const double xi = dp.lambda0 * pt.x;
  const double eta = pt.p / (dp.hbar * dp.lambda0);
  // D arguments -lambda0 (x + a(1 - g0) -/+ i p/(m0 omega))
  const std::complex<double> w(-xi - b * (1.0 - g0), eta);
  const double shifted = xi + b * (g0 + 1.0);
  const double log_prefactor = -std::log(std::numbers::pi * dp.hbar) -
                               (0.5 * eta * eta + 0.5 * shifted * shifted - b2 * g0 * g0) +
                               (2.0 * b2 + 1.0) * std::log(g0 * b) + specfun::log_gamma(b2 + 1.0) -
                               specfun::log_gamma(b2 + 0.5) +
                               specfun::log_pochhammer(2.0 * b2 + 1.0, n) - log_factorial(n);
  return pcf_double_sum(n, b2, std::log(2.0 * g0 * b), w, log_prefactor);
}

DoubleSum semiconfined_double_sum_g0(int n, const PhasePoint& pt, const OscillatorParams& params,
                                     const DerivedParams& dp) {
  require_state(n);
  if (!params.semiconfined()) throw DomainError("double sum needs a finite a");
  if (params.g != 0.0) throw DomainError("field-free double sum requires g = 0");
  const double b = dp.b, b2 = b * b;
  const double xi = dp.lambda0 * pt.x;
  const double eta = pt.p / (dp.hbar * dp.lambda0);
  const std::complex<double> w(-xi, eta);
  const double log_prefactor = -std::log(std::numbers::pi * dp.hbar) -
                               0.5 * (eta * eta + xi * xi + 4.0 * b * xi + 2.0 * b2) +
                               (2.0 * b2 + 1.0) * std::log(b) + specfun::log_gamma(b2 + 1.0) -
                               specfun::log_gamma(b2 + 0.5) +
                               specfun::log_pochhammer(2.0 * b2 + 1.0, n) - log_factorial(n);
  return pcf_double_sum(n, b2, std::log(2.0 * b), w, log_prefactor);
}

double semiconfined_ground(const PhasePoint& pt, const OscillatorParams& params,
                           const DerivedParams& dp) {
  if (!params.semiconfined()) throw DomainError("ground-state form needs a finite a");
  const double b = dp.b, b2 = b * b, g0 = dp.g0;
  const double xi = dp.lambda0 * pt.x;
  const double eta = pt.p / (dp.hbar * dp.lambda0);
  const std::complex<double> w(-xi - b * (1.0 - g0), eta);
  const double shifted = xi + b * (g0 + 1.0);
  const double log_prefactor = -std::log(std::numbers::pi * dp.hbar) -
                               (0.5 * eta * eta + 0.5 * shifted * shifted - b2 * g0 * g0) +
                               (2.0 * b2 + 1.0) * std::log(g0 * b) + specfun::log_gamma(b2 + 1.0) -
                               specfun::log_gamma(b2 + 0.5);
  const ScaledComplex prod = specfun::pcf_d(-(b2 + 1.0), w) * specfun::pcf_d(-(b2 + 1.0), std::conj(w));
  if (prod.is_zero()) return 0.0;
  return std::exp(log_prefactor + prod.log_modulus) * std::cos(prod.phase);
}

double hermite_field_free(int n, const PhasePoint& pt, const OscillatorParams& params) {
  require_state(n);
  const auto& [m0, omega, hbar, a, g] = params;
  (void)a;
  (void)g;
  const double energy = (pt.p * pt.p / (2.0 * m0) + 0.5 * m0 * omega * omega * pt.x * pt.x) / (hbar * omega);
  return hermite_energy_form(n, energy, hbar);
}

}  // namespace forms

}  // namespace husimi
