#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "husimi/error.hpp"
#include "husimi/quadrature.hpp"
#include "husimi/specfun.hpp"

namespace husimi::specfun {

namespace {

// Integrand is cut where it falls this many nats below its peak (~1e-20).
constexpr double kTailNats = 46.0;

// Solve log_f(y) = level on [lo, hi], with log_f(lo) < level <= log_f(hi) or
// the reverse; plain bisection, log_f need only be monotone on the bracket.
template <typename F>
double bisect_level(F&& log_f, double lo, double hi, double level) {
  const bool rising = log_f(lo) < level;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((log_f(mid) < level) == rising)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// int_0^inf exp(log_f(t) - i*phase(t)) dt for a unimodal log_f peaking at
// `peak`. Returns the scaled value.
template <typename LogF, typename PhaseF>
ScaledComplex integrate_unimodal(LogF&& log_f, PhaseF&& phase, double peak, double rel_tol) {
  const double top = log_f(peak);
  const double level = top - kTailNats;

  double lo = 0.0;
  if (peak > 0.0 && !(log_f(0.0) >= level)) lo = bisect_level(log_f, 0.0, peak, level);

  double step = std::max(1.0, peak);
  while (log_f(peak + step) > level) step *= 2.0;
  const double hi = bisect_level(log_f, peak, peak + step, level);

  const double phase_ref = phase(peak);
  auto integrand = [&](double t) {
    return std::polar(std::exp(log_f(t) - top), -(phase(t) - phase_ref));
  };
  const auto r = quad::integrate<std::complex<double>>(integrand, lo, hi, rel_tol, 4000);
  ScaledComplex s = ScaledComplex::from_complex(r.value);
  if (s.is_zero()) return s;
  return ScaledComplex::from_log(s.log_modulus + top, s.phase - phase_ref);
}

}  // namespace

namespace {

// int_0^inf s^{alpha-1} e^{-s^2/2 - u1 s} e^{-i (t2 s^2 / 2 + u2 s)} ds.
ScaledComplex ray_integral(double alpha, double u1, double u2, double t2, double rel_tol) {
  if (alpha >= 1.0) {
    const double am1 = alpha - 1.0;
    auto log_f = [=](double y) {
      const double power = am1 == 0.0 ? 0.0 : am1 * std::log(y);
      return power - 0.5 * y * y - u1 * y;
    };
    auto phase = [=](double y) { return (0.5 * t2 * y + u2) * y; };
    double peak;
    if (am1 == 0.0) {
      peak = std::max(0.0, -u1);
    } else {
      const double root = std::sqrt(u1 * u1 + 4.0 * am1);
      peak = u1 > 0.0 ? 2.0 * am1 / (u1 + root) : 0.5 * (root - u1);
    }
    return integrate_unimodal(log_f, phase, peak, rel_tol);
  }

  // 0 < alpha < 1: y = t^{1/alpha} removes the endpoint singularity,
  // y^{alpha-1} dy = dt / alpha.
  const double inv = 1.0 / alpha;
  auto log_f = [=](double t) {
    const double y = std::pow(t, inv);
    return -0.5 * y * y - u1 * y;
  };
  auto phase = [=](double t) {
    const double y = std::pow(t, inv);
    return (0.5 * t2 * y + u2) * y;
  };
  const double peak = u1 < 0.0 ? std::pow(-u1, alpha) : 0.0;
  ScaledComplex s = integrate_unimodal(log_f, phase, peak, rel_tol);
  return s.is_zero() ? s : ScaledComplex::from_log(s.log_modulus - std::log(alpha), s.phase);
}

// Direction of the integration ray: through the saddle of
// (alpha-1) ln y - y^2/2 - q y, or along the steepest descent from the
// endpoint when there is none. Kept inside |theta| < pi/4 where the
// Gaussian still decays.
double ray_angle(double alpha, std::complex<double> q) {
  if (q.imag() == 0.0) return 0.0;
  const std::complex<double> saddle = 0.5 * (-q + std::sqrt(q * q + 4.0 * std::max(alpha - 1.0, 0.0)));
  const double theta = std::abs(saddle) > 1e-8 * (1.0 + std::abs(q)) ? std::arg(saddle) : -std::arg(q);
  return std::clamp(theta, -0.7, 0.7);
}

}  // namespace

ScaledComplex table_integral(double alpha, std::complex<double> q, double rel_tol) {
  if (!(alpha > 0.0)) throw DomainError("table_integral: alpha must be positive");
  // Rotate y = s e^{i theta} / sqrt(cos 2 theta); the arc at infinity vanishes
  // for |theta| < pi/4, and the oscillation along the ray is much slower.
  const double theta = ray_angle(alpha, q);
  const double c = std::cos(2.0 * theta);
  const std::complex<double> u = q * std::polar(1.0, theta) / std::sqrt(c);
  const ScaledComplex j = ray_integral(alpha, u.real(), u.imag(), std::tan(2.0 * theta), rel_tol);
  if (j.is_zero()) return j;
  return ScaledComplex::from_log(j.log_modulus - 0.5 * alpha * std::log(c), j.phase + alpha * theta);
}

ScaledComplex pcf_d_integral(double nu, std::complex<double> z, double rel_tol) {
  const double alpha = -nu;
  if (!(alpha > 0.0)) throw DomainError("pcf_d_integral: requires nu < 0");
  const ScaledComplex integral = table_integral(alpha, z, rel_tol);
  const std::complex<double> z2 = z * z;
  return integral.times_exp({-0.25 * z2.real() - log_gamma(alpha), -0.25 * z2.imag()});
}

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_100;

struct ComplexR {
  Real re, im;
};

struct SeriesSum {
  ComplexR value;
  Real abs_sum;  // sum of |terms|, the cancellation scale
};

ComplexR mul(const ComplexR& a, const ComplexR& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Real modulus(const ComplexR& a) { return mp::sqrt(a.re * a.re + a.im * a.im); }

SeriesSum kummer_extended(const Real& a, const Real& b, const ComplexR& w) {
  const Real eps = std::numeric_limits<Real>::epsilon();
  SeriesSum s{{Real(1), Real(0)}, Real(1)};
  ComplexR term{Real(1), Real(0)};
  int small_run = 0;
  for (int k = 0; k < 20000; ++k) {
    const Real ratio = (a + k) / ((b + k) * (k + 1));
    ComplexR next = mul(term, w);
    next.re *= ratio;
    next.im *= ratio;
    s.value.re += next.re;
    s.value.im += next.im;
    const Real mag = modulus(next);
    s.abs_sum += mag;
    if (mag <= eps * modulus(s.value) && mag <= modulus(term)) {
      if (++small_run == 3) return s;
    } else {
      small_run = 0;
    }
    term = next;
  }
  throw AccuracyError("pcf_d_series: 1F1 series did not converge", 1.0);
}

Real reciprocal_gamma_extended(const Real& x) {
  if (x <= 0 && x == mp::floor(x)) return Real(0);
  return 1 / boost::math::tgamma(x);
}

}  // namespace

ScaledComplex pcf_d_series(double nu, std::complex<double> z) {
  if (std::abs(z) > 8.0 || std::abs(nu) > 30.0)
    throw DomainError("pcf_d_series: requires |z| <= 8 and |nu| <= 30");

  const Real nu_r(nu);
  const ComplexR zr{Real(z.real()), Real(z.imag())};
  ComplexR w = mul(zr, zr);
  w.re /= 2;
  w.im /= 2;

  const SeriesSum f1 = kummer_extended(-nu_r / 2, Real(0.5), w);
  const SeriesSum f2 = kummer_extended((1 - nu_r) / 2, Real(1.5), w);
  const Real c1 = reciprocal_gamma_extended((1 - nu_r) / 2);
  const Real c2 = reciprocal_gamma_extended(-nu_r / 2) * mp::sqrt(Real(2));

  const ComplexR zf2 = mul(zr, f2.value);
  const ComplexR bracket{c1 * f1.value.re - c2 * zf2.re, c1 * f1.value.im - c2 * zf2.im};
  const Real size = modulus(bracket);
  if (size == 0) return ScaledComplex::zero();

  const Real scale = mp::abs(c1) * f1.abs_sum + mp::abs(c2) * modulus(zr) * f2.abs_sum;
  const double loss =
      static_cast<double>(64 * std::numeric_limits<Real>::epsilon() * scale / size);
  if (loss > 1e-12) throw AccuracyError("pcf_d_series: cancellation exceeds working precision", loss);

  const double log_bracket = static_cast<double>(mp::log(size));
  const double arg_bracket = static_cast<double>(mp::atan2(bracket.im, bracket.re));
  const std::complex<double> z2 = z * z;
  const double log_pre = 0.5 * std::log(std::numbers::pi) + 0.5 * nu * std::numbers::ln2;
  return ScaledComplex::from_log(log_pre + log_bracket - 0.25 * z2.real(),
                                 arg_bracket - 0.25 * z2.imag());
}

ScaledComplex pcf_d(double nu, std::complex<double> z) {
  if (!(nu <= 1.0)) throw DomainError("pcf_d: orders above 1 are not supported");
  if (nu < 0.0) return pcf_d_integral(nu, z);
  const std::complex<double> gauss = -0.25 * z * z;
  if (nu == 0.0) return ScaledComplex::from_log(0.0, 0.0).times_exp(gauss);
  if (nu == 1.0) return ScaledComplex::from_complex(z).times_exp(gauss);
  return pcf_d_series(nu, z);
}

}  // namespace husimi::specfun
