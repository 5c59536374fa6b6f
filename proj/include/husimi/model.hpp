#pragma once

#include <limits>

namespace husimi {

enum class ModelKind { Hermite, Semiconfined };

/// Physical inputs. a = +inf selects the ordinary (Hermite) oscillator.
struct OscillatorParams {
  double m0 = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double a = std::numeric_limits<double>::infinity();
  double g = 0.0;

  bool semiconfined() const { return a != std::numeric_limits<double>::infinity(); }
  ModelKind kind() const { return semiconfined() ? ModelKind::Semiconfined : ModelKind::Hermite; }
};

struct DerivedParams {
  double lambda0 = 1.0;     // sqrt(m0 omega / hbar)
  double b = 0.0;           // lambda0 a; +inf for the Hermite model
  double g0 = 1.0;          // sqrt(1 + 2g/(m0 omega^2 a)); 1 for the Hermite model
  double x0 = 0.0;          // g / (m0 omega^2)
  double delta_x_sq = 0.5;  // hbar / (2 m0 omega), the smoothing width
  double hbar = 1.0;
};

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
};

/// Dimensionless per-point quantities shared by the closed forms.
struct PointKinematics {
  double xi = 0.0;     // lambda0 x
  double xi0 = 0.0;    // lambda0 x0
  double eta = 0.0;    // p / (hbar lambda0)
  double Delta = 0.0;  // xi0 + xi
  double delta = 0.0;  // xi0 - xi
  double b1 = 0.0;     // xi + b
  double z_re = 0.0;   // b g0 - b1
  double z_im = 0.0;   // eta
  double beta0_re = 0.0;  // -b1^2 / 2
  double beta0_im = 0.0;  // b eta
};

/// Validates params and computes the derived constants. Throws DomainError
/// for non-positive m0/omega/hbar/a or when g0 would be imaginary.
DerivedParams derive(const OscillatorParams& params);

/// Requires `kind` to agree with params (Semiconfined needs a finite a).
void check_model(ModelKind kind, const OscillatorParams& params);

PointKinematics kinematics(const PhasePoint& pt, const DerivedParams& dp);

/// psi_{Nn}^g(x) = C_Nn exp(-lambda0^2 (x+x0)^2 / 2) H_n(lambda0 (x+x0)).
double psi_hermite(int n, double x, const DerivedParams& dp);

/// Laguerre-type wavefunction of the semiconfined oscillator; zero for x <= -a.
/// The normalization constant is combined with the power and exponential
/// factors in log space.
double psi_semiconfined(int n, double x, const OscillatorParams& params, const DerivedParams& dp);

/// Dispatch on params.kind().
double psi(int n, double x, const OscillatorParams& params, const DerivedParams& dp);

double energy_hermite(int n, const OscillatorParams& params);
double energy_semiconfined(int n, const OscillatorParams& params);

}  // namespace husimi
