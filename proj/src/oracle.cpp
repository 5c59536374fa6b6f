#include "husimi/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "husimi/error.hpp"
#include "husimi/husimi.hpp"
#include "husimi/specfun.hpp"

namespace husimi::oracle {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Integral {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

template <typename F>
Integral kronrod(F&& f, double lo, double hi, double tol) {
  Integral r;
  r.value = Kronrod::integrate(f, lo, hi, 15, tol, &r.error, &r.l1);
  return r;
}

// Integrate f over [lo, hi] in panels no wider than max_step. When
// wall_power > 0 the first panel starts at an algebraic zero of order
// wall_power (f ~ (x - lo)^wall_power); it is integrated in t with
// x = lo + t^m, which makes the integrand vanish to high order at t = 0.
template <typename F>
Integral integrate_panels(F&& f, double lo, double hi, double max_step, double tol,
                          int max_panels, double wall_power = 0.0) {
  Integral total;
  if (!(hi > lo)) return total;
  const double width = hi - lo;
  int panels = std::isfinite(max_step) ? static_cast<int>(std::ceil(width / max_step)) : 1;
  panels = std::max(panels, 1);
  if (panels > max_panels)
    throw AccuracyError("oracle quadrature: oscillation bound needs too many panels", 0.0);
  const double step = width / panels;
  for (int i = 0; i < panels; ++i) {
    const double a = lo + step * i;
    const double b = i + 1 == panels ? hi : a + step;
    Integral part;
    if (i == 0 && wall_power > 0.0 && wall_power < 8.0) {
      const double m = std::ceil(9.0 / (wall_power + 1.0));
      auto g = [&](double t) { return f(a + std::pow(t, m)) * m * std::pow(t, m - 1.0); };
      part = kronrod(g, 0.0, std::pow(b - a, 1.0 / m), tol);
    } else {
      part = kronrod(f, a, b, tol);
    }
    total.value += part.value;
    total.error += part.error;
    total.l1 += part.l1;
  }
  return total;
}

struct Window {
  double lo, hi;
  double wall_power = 0.0;
};

// Smoothing window |x' - x| <= L intersected with the wavefunction support.
Window amplitude_window(const PhasePoint& pt, const OscillatorParams& params, const DerivedParams& dp,
                        const QuadratureControl& ctl) {
  const double half = std::sqrt(2.0 * std::log(1.0 / ctl.envelope_cut)) / dp.lambda0;
  Window w{pt.x - half, pt.x + half};
  if (params.semiconfined() && w.lo <= -params.a) {
    w.lo = -params.a;
    w.wall_power = dp.b * dp.b;
  }
  return w;
}

}  // namespace

void QuadratureControl::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 || !(envelope_cut > 0.0) ||
      !(envelope_cut < 1.0) || !(mass_cut > 0.0) || !(mass_cut < 1.0))
    throw DomainError("invalid QuadratureControl");
}

std::complex<double> amplitude_quadrature(ModelKind model, int n, const PhasePoint& pt,
                                          const OscillatorParams& params, const QuadratureControl& ctl) {
  ctl.validate();
  check_model(model, params);
  const DerivedParams dp = derive(params);
  const Window w = amplitude_window(pt, params, dp, ctl);
  if (!(w.hi > w.lo)) return {};

  const double k = pt.p / params.hbar;
  const double lam2 = dp.lambda0 * dp.lambda0;
  // Phase measured from x so the oscillating factor stays small.
  auto envelope = [&](double xp) {
    const double d = xp - pt.x;
    return psi(n, xp, params, dp) * std::exp(-0.5 * lam2 * d * d);
  };
  auto re = [&](double xp) { return envelope(xp) * std::cos(k * (xp - pt.x)); };
  auto im = [&](double xp) { return -envelope(xp) * std::sin(k * (xp - pt.x)); };

  // A 31-point Kronrod panel of width 3 hbar/|p| keeps the mean node spacing
  // near hbar/(10|p|).
  double max_step = 2.0 / dp.lambda0;
  if (pt.p != 0.0) max_step = std::min(max_step, 3.0 * params.hbar / std::abs(pt.p));
  const double panel_tol = 1e-2 * ctl.rel_tol;
  const Integral ir = integrate_panels(re, w.lo, w.hi, max_step, panel_tol, ctl.max_subdivisions, w.wall_power);
  const Integral ii = integrate_panels(im, w.lo, w.hi, max_step, panel_tol, ctl.max_subdivisions, w.wall_power);

  const std::complex<double> local(ir.value, ii.value);
  const double err = ir.error + ii.error;
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * (ir.l1 + ii.l1);
  if (err > std::max({ctl.rel_tol * std::abs(local), ctl.abs_tol, roundoff}))
    throw AccuracyError("husimi_quadrature did not converge", err / std::max(std::abs(local), 1e-300));
  return local * std::polar(1.0, -k * pt.x);
}

double husimi_quadrature(ModelKind model, int n, const PhasePoint& pt, const OscillatorParams& params,
                         const QuadratureControl& ctl) {
  const std::complex<double> amp = amplitude_quadrature(model, n, pt, params, ctl);
  const double dx = std::sqrt(params.hbar / (2.0 * params.m0 * params.omega));
  return std::norm(amp) / (std::pow(2.0 * std::numbers::pi, 1.5) * params.hbar * dx);
}

VerificationReport closed_form_check(ModelKind model, int n, const OscillatorParams& params,
                                     const GridSpec& grid, const QuadratureControl& ctl, double tolerance) {
  grid.validate();
  check_model(model, params);
  const DerivedParams dp = derive(params);
  const double bound = 1.0 / (std::numbers::pi * params.hbar) + 1e-12;
  VerificationReport rep;
  bool bounded = true;
  for (int i = 0; i < grid.x_steps; ++i) {
    const double x = grid.x_at(i);
    if (params.semiconfined() && x <= -params.a) continue;
    for (int j = 0; j < grid.p_steps; ++j) {
      const PhasePoint pt{x, grid.p_at(j)};
      const double closed = husimi_value(model, n, pt, params, dp);
      const double quad = husimi_quadrature(model, n, pt, params, ctl);
      const double diff = std::abs(closed - quad);
      bounded = bounded && std::isfinite(closed) && closed >= 0.0 && closed <= bound;
      rep.max_abs_error = std::max(rep.max_abs_error, diff);
      rep.max_rel_error = std::max(rep.max_rel_error, diff / std::max(1.0, closed));
      if (!std::isfinite(closed)) rep.max_rel_error = std::numeric_limits<double>::infinity();
      ++rep.points_tested;
    }
  }
  std::ostringstream name;
  name << "closed_form/" << (model == ModelKind::Hermite ? "hermite" : "semiconfined") << "/n=" << n
       << ",a=" << params.a << ",g=" << params.g;
  rep.name = name.str();
  rep.pass = rep.max_rel_error <= tolerance && bounded;
  std::ostringstream notes;
  notes << "bounded=" << (bounded ? "yes" : "no") << " tol=" << tolerance;
  rep.notes = notes.str();
  return rep;
}

VerificationReport orthonormality_check(ModelKind model, int m, int n, const OscillatorParams& params,
                                        const QuadratureControl& ctl, double tolerance) {
  ctl.validate();
  check_model(model, params);
  if (m < 0 || n < 0) throw DomainError("state indices must be nonnegative");
  const DerivedParams dp = derive(params);

  Window w;
  const double cut_nats = std::log(1.0 / ctl.envelope_cut) + 20.0;
  if (model == ModelKind::Hermite) {
    const double half = (std::sqrt(2.0 * std::max(m, n) + 1.0) + std::sqrt(cut_nats)) / dp.lambda0;
    w = {-dp.x0 - half, -dp.x0 + half};
  } else {
    // |psi|^2 envelope in u = x + a: 2b^2 ln u - 2 lambda0^2 a g0 u, peak at u = a / g0.
    const double b2 = dp.b * dp.b;
    const double rate = 2.0 * dp.lambda0 * dp.lambda0 * params.a * dp.g0;
    auto env = [&](double u) { return 2.0 * b2 * std::log(u) - rate * u; };
    const double peak = params.a / dp.g0;
    const double level = env(peak) - cut_nats - 4.0 * std::max(m, n);
    double hi = peak * 2.0;
    while (env(hi) > level) hi *= 1.5;
    double lo = peak;
    while (lo > 1e-300 && env(lo) > level) lo *= 0.5;
    w = {lo <= 1e-300 || env(lo) > level ? -params.a : -params.a + lo, -params.a + hi};
    if (w.lo == -params.a) w.wall_power = 2.0 * b2;
  }

  auto f = [&](double x) { return psi(m, x, params, dp) * psi(n, x, params, dp); };
  const Integral r = integrate_panels(f, w.lo, w.hi, 1.0 / dp.lambda0, 1e-2 * ctl.rel_tol,
                                      ctl.max_subdivisions, w.wall_power);
  const double target = m == n ? 1.0 : 0.0;
  VerificationReport rep;
  std::ostringstream name;
  name << "orthonormality/" << (model == ModelKind::Hermite ? "hermite" : "semiconfined") << "/m=" << m
       << ",n=" << n << ",a=" << params.a << ",g=" << params.g;
  rep.name = name.str();
  rep.max_abs_error = std::abs(r.value - target);
  rep.max_rel_error = m == n ? rep.max_abs_error : rep.max_abs_error;
  rep.points_tested = 1;
  rep.pass = rep.max_abs_error <= tolerance;
  std::ostringstream notes;
  notes.precision(17);
  notes << "overlap=" << r.value << " window=[" << w.lo << "," << w.hi << "] tol=" << tolerance;
  rep.notes = notes.str();
  return rep;
}

ScaledComplex table_integral_quadrature(double alpha, std::complex<double> q, const QuadratureControl& ctl) {
  ctl.validate();
  if (!(alpha > 0.0)) throw DomainError("table integral needs alpha > 0");
  // y = t^2: int_0^inf 2 t^{2 alpha - 1} e^{-t^4/2 - q t^2} dt.
  const double q1 = q.real(), q2 = q.imag();
  auto log_f = [&](double t) {
    const double y = t * t;
    return std::log(2.0) + (2.0 * alpha - 1.0) * std::log(t) - 0.5 * y * y - q1 * y;
  };
  // Peak of the y-integrand: (alpha-1)/y - y - q1 = 0; the t-form peaks nearby.
  const double y_peak = std::max(0.5 * (-q1 + std::sqrt(q1 * q1 + 4.0 * std::max(alpha - 1.0, 0.0))), 1e-3);
  double t_peak = std::sqrt(y_peak);
  for (int i = 0; i < 60; ++i) {  // golden-free refinement by local scan
    const double h = 1e-2 * std::max(t_peak, 1e-3);
    if (log_f(t_peak + h) > log_f(t_peak)) t_peak += h;
    else if (t_peak - h > 0 && log_f(t_peak - h) > log_f(t_peak)) t_peak -= h;
    else break;
  }
  const double top = log_f(t_peak);
  const double level = top - 60.0;
  double t_hi = t_peak + 1.0;
  while (log_f(t_hi) > level) t_hi += 1.0;

  const double phase_ref = q2 * t_peak * t_peak;
  auto re = [&](double t) { return std::exp(log_f(t) - top) * std::cos(q2 * t * t - phase_ref); };
  auto im = [&](double t) { return -std::exp(log_f(t) - top) * std::sin(q2 * t * t - phase_ref); };
  const double step = 0.25 * std::max(t_hi, 1.0) / std::max(1.0, std::abs(q2));
  const Integral ir = integrate_panels(re, 0.0, t_hi, step, 1e-2 * ctl.rel_tol, ctl.max_subdivisions);
  const Integral ii = integrate_panels(im, 0.0, t_hi, step, 1e-2 * ctl.rel_tol, ctl.max_subdivisions);
  const ScaledComplex s = ScaledComplex::from_complex({ir.value, ii.value});
  if (s.is_zero()) return s;
  return ScaledComplex::from_log(s.log_modulus + top, s.phase - phase_ref);
}

VerificationReport table_integral_check(double alpha, std::complex<double> q, const QuadratureControl& ctl,
                                        double tolerance) {
  const ScaledComplex quad = table_integral_quadrature(alpha, q, ctl);
  // Gamma(alpha) e^{q^2/4} D_{-alpha}(q)
  const std::complex<double> q2 = q * q;
  const ScaledComplex closed = specfun::pcf_d(-alpha, q).times_exp(
      {specfun::log_gamma(alpha) + 0.25 * q2.real(), 0.25 * q2.imag()});
  const double rel = std::abs((closed / quad).to_complex() - 1.0);

  VerificationReport rep;
  std::ostringstream name;
  name << "table_integral/alpha=" << alpha << ",q=" << q.real() << (q.imag() < 0 ? "" : "+") << q.imag() << "i";
  rep.name = name.str();
  rep.max_rel_error = rel;
  rep.max_abs_error = std::abs(closed.log_modulus - quad.log_modulus);
  rep.points_tested = 1;
  std::ostringstream notes;
  notes.precision(17);
  notes << "log|I|=" << quad.log_modulus << " integral_route_rel=" << rel;
  if (alpha <= 30.0 && std::abs(q) <= 8.0) {
    const ScaledComplex series = specfun::pcf_d_series(-alpha, q);
    const ScaledComplex integral = specfun::pcf_d_integral(-alpha, q);
    const double route = std::abs((series / integral).to_complex() - 1.0);
    rep.max_rel_error = std::max(rep.max_rel_error, route);
    notes << " series_vs_integral_rel=" << route;
  }
  notes << " tol=" << tolerance;
  rep.notes = notes.str();
  rep.pass = rep.max_rel_error <= tolerance;
  return rep;
}

namespace {

struct Box {
  double x_lo, x_hi, p_lo, p_hi;
};

// Breakpoints on [lo, hi]: unit panels of width s within 8 s of c, then
// panels growing by 1.5x so algebraic tails cost logarithmically many.
std::vector<double> wide_breakpoints(double lo, double hi, double c, double s) {
  std::vector<double> pts{lo, hi};
  for (int k = -8; k <= 8; ++k) pts.push_back(c + k * s);
  for (double d = 12.0 * s; d < std::max(hi - c, c - lo); d *= 1.5) {
    pts.push_back(c - d);
    pts.push_back(c + d);
  }
  std::vector<double> out;
  for (double t : pts)
    if (t >= lo && t <= hi) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Integral over [lo, hi]: panels of width 2s within 8s of c; outside that
// core, p = c +- 8s/t maps each tail onto part of (0, 1], which keeps
// algebraically decaying tails cheap.
template <typename F>
double integrate_wide(F&& f, double lo, double hi, double c, double s, double tol) {
  const double edge = 8.0 * s;
  const double core_lo = std::max(lo, c - edge), core_hi = std::min(hi, c + edge);
  double total = 0.0;
  if (core_hi > core_lo) {
    const int panels = std::max(1, static_cast<int>(std::ceil((core_hi - core_lo) / (2.0 * s))));
    const double h = (core_hi - core_lo) / panels;
    for (int i = 0; i < panels; ++i) {
      const double a = core_lo + i * h;
      total += Kronrod::integrate(f, a, i + 1 == panels ? core_hi : a + h, 15, tol);
    }
  }
  if (hi > c + edge) {
    auto g = [&](double t) { return f(c + edge / t) * edge / (t * t); };
    total += Kronrod::integrate(g, edge / (hi - c), 1.0, 15, tol);
  }
  if (lo < c - edge) {
    auto g = [&](double t) { return f(c - edge / t) * edge / (t * t); };
    total += Kronrod::integrate(g, edge / (c - lo), 1.0, 15, tol);
  }
  return total;
}

// Largest value on a segment, probing the central region densely and the
// far part geometrically.
template <typename W>
double edge_max(W&& w, bool vary_p, double fixed, double lo, double hi, double c, double s) {
  double m = 0.0;
  for (double t : wide_breakpoints(lo, hi, c, 0.5 * s)) m = std::max(m, vary_p ? w(fixed, t) : w(t, fixed));
  return m;
}

}  // namespace

VerificationReport normalization_check(ModelKind model, int n, const OscillatorParams& params,
                                       const QuadratureControl& ctl, double tolerance) {
  ctl.validate();
  check_model(model, params);
  const DerivedParams dp = derive(params);
  auto w = [&](double x, double p) { return husimi_value(model, n, {x, p}, params, dp); };

  const double sx = 1.0 / dp.lambda0;
  const double sp = params.hbar * dp.lambda0;
  const double cx = model == ModelKind::Hermite ? -dp.x0 : -params.a + params.a / dp.g0;
  const double reach = 6.0 + std::sqrt(2.0 * n + 1.0);
  Box box{cx - reach * sx, cx + reach * sx, -reach * sp, reach * sp};

  double peak = 0.0;
  constexpr int samples = 41;
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j)
      peak = std::max(peak, w(box.x_lo + (box.x_hi - box.x_lo) * i / (samples - 1),
                              box.p_lo + (box.p_hi - box.p_lo) * j / (samples - 1)));
  if (!(peak > 0.0)) throw AccuracyError("normalization_check: distribution vanishes on the initial window", 0.0);

  int expansions = 0;
  const double level = ctl.mass_cut * peak;
  for (;; ++expansions) {
    if (expansions > 60) throw AccuracyError("normalization_check: window expansion failed", 0.0);
    bool grown = false;
    if (edge_max(w, true, box.x_lo, box.p_lo, box.p_hi, 0.0, sp) > level)
      box.x_lo = cx - 1.5 * (cx - box.x_lo), grown = true;
    if (edge_max(w, true, box.x_hi, box.p_lo, box.p_hi, 0.0, sp) > level)
      box.x_hi = cx + 1.5 * (box.x_hi - cx), grown = true;
    if (edge_max(w, false, box.p_lo, box.x_lo, box.x_hi, cx, sx) > level) box.p_lo *= 1.5, grown = true;
    if (edge_max(w, false, box.p_hi, box.x_lo, box.x_hi, cx, sx) > level) box.p_hi *= 1.5, grown = true;
    if (!grown) break;
  }

  // The target is an absolute 1e-4-type tolerance; resolving each 1-D
  // integral to 1e-3 of it is enough and keeps the 2-D cost bounded.
  const double tol = std::max(ctl.rel_tol, 1e-3 * tolerance);
  auto inner = [&](double x) {
    return integrate_wide([&](double p) { return w(x, p); }, box.p_lo, box.p_hi, 0.0, sp, tol);
  };
  const double total = integrate_wide(inner, box.x_lo, box.x_hi, cx, sx, tol);

  VerificationReport rep;
  std::ostringstream name;
  name << "normalization/" << (model == ModelKind::Hermite ? "hermite" : "semiconfined") << "/n=" << n
       << ",a=" << params.a << ",g=" << params.g;
  rep.name = name.str();
  rep.max_abs_error = std::abs(total - 1.0);
  rep.max_rel_error = rep.max_abs_error;
  rep.points_tested = 1;
  rep.pass = rep.max_abs_error <= tolerance;
  std::ostringstream notes;
  notes.precision(17);
  notes << "integral=" << total << " window=x[" << box.x_lo << "," << box.x_hi << "]xp[" << box.p_lo << ","
        << box.p_hi << "] expansions=" << expansions << " tol=" << tolerance;
  rep.notes = notes.str();
  return rep;
}

}  // namespace husimi::oracle
