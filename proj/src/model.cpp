#include "husimi/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "husimi/error.hpp"
#include "husimi/specfun.hpp"

namespace husimi {

DerivedParams derive(const OscillatorParams& params) {
  if (!(params.m0 > 0.0) || !(params.omega > 0.0) || !(params.hbar > 0.0))
    throw DomainError("m0, omega and hbar must be positive");
  if (!(params.a > 0.0)) throw DomainError("semiconfinement length a must be positive");
  if (!std::isfinite(params.g)) throw DomainError("field strength g must be finite");

  DerivedParams dp;
  dp.lambda0 = std::sqrt(params.m0 * params.omega / params.hbar);
  dp.x0 = params.g / (params.m0 * params.omega * params.omega);
  dp.delta_x_sq = params.hbar / (2.0 * params.m0 * params.omega);
  dp.hbar = params.hbar;
  if (params.semiconfined()) {
    const double radicand = 1.0 + 2.0 * params.g / (params.m0 * params.omega * params.omega * params.a);
    if (!(radicand > 0.0))
      throw DomainError("field too strong for a = " + std::to_string(params.a) +
                        ": 1 + 2g/(m0 omega^2 a) must be positive");
    dp.b = dp.lambda0 * params.a;
    dp.g0 = std::sqrt(radicand);
  } else {
    dp.b = std::numeric_limits<double>::infinity();
    dp.g0 = 1.0;
  }
  return dp;
}

void check_model(ModelKind kind, const OscillatorParams& params) {
  if (kind == ModelKind::Semiconfined && !params.semiconfined())
    throw DomainError("the semiconfined model needs a finite --a");
  if (kind == ModelKind::Hermite && params.semiconfined())
    throw DomainError("the hermite model takes no semiconfinement length");
}

PointKinematics kinematics(const PhasePoint& pt, const DerivedParams& dp) {
  PointKinematics k;
  k.xi = dp.lambda0 * pt.x;
  k.xi0 = dp.lambda0 * dp.x0;
  k.eta = pt.p / (dp.hbar * dp.lambda0);
  k.Delta = k.xi0 + k.xi;
  k.delta = k.xi0 - k.xi;
  if (std::isfinite(dp.b)) {
    k.b1 = k.xi + dp.b;
    k.z_re = dp.b * dp.g0 - k.b1;
    k.beta0_re = -0.5 * k.b1 * k.b1;
    k.beta0_im = dp.b * k.eta;
  }
  k.z_im = k.eta;
  return k;
}

double psi_hermite(int n, double x, const DerivedParams& dp) {
  if (n < 0) throw DomainError("state index must be nonnegative");
  const double y = dp.lambda0 * (x + dp.x0);
  const double log_c = 0.25 * std::log(dp.lambda0 * dp.lambda0 / std::numbers::pi) -
                       0.5 * (n * std::numbers::ln2 + specfun::log_gamma(n + 1.0));
  return std::exp(log_c - 0.5 * y * y) * specfun::hermite(n, y);
}

double psi_semiconfined(int n, double x, const OscillatorParams& params, const DerivedParams& dp) {
  if (n < 0) throw DomainError("state index must be nonnegative");
  if (!params.semiconfined()) throw DomainError("psi_semiconfined needs a finite a");
  const double a = params.a;
  if (x <= -a) return 0.0;

  const double b2 = dp.b * dp.b;
  const double lam2 = dp.lambda0 * dp.lambda0;
  // ln |C_n^{gSC}|: g0^{b^2+1/2} (2b^2)^{b^2+1/2} sqrt(n! / (a Gamma(n + 2b^2 + 1)))
  const double log_c = (b2 + 0.5) * (std::log(2.0 * b2) + std::log(dp.g0)) +
                       0.5 * (specfun::log_gamma(n + 1.0) - std::log(a) -
                              specfun::log_gamma(n + 2.0 * b2 + 1.0));
  const double u = x + a;
  const double log_envelope = b2 * std::log1p(x / a) - lam2 * a * dp.g0 * u;
  const double poly = specfun::laguerre(n, 2.0 * b2, 2.0 * lam2 * a * dp.g0 * u);
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * std::exp(log_c + log_envelope) * poly;
}

double psi(int n, double x, const OscillatorParams& params, const DerivedParams& dp) {
  return params.semiconfined() ? psi_semiconfined(n, x, params, dp) : psi_hermite(n, x, dp);
}

double energy_hermite(int n, const OscillatorParams& params) {
  if (n < 0) throw DomainError("state index must be nonnegative");
  const auto& [m0, omega, hbar, a, g] = params;
  (void)a;
  return hbar * omega * (n + 0.5) - g * g / (2.0 * m0 * omega * omega);
}

double energy_semiconfined(int n, const OscillatorParams& params) {
  if (n < 0) throw DomainError("state index must be nonnegative");
  const DerivedParams dp = derive(params);
  if (!params.semiconfined()) throw DomainError("energy_semiconfined needs a finite a");
  const auto& [m0, omega, hbar, a, g] = params;
  return hbar * omega * dp.g0 * (n + 0.5 + m0 * omega * a * a / hbar) - m0 * omega * omega * a * a - a * g;
}

}  // namespace husimi
