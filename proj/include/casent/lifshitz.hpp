#pragma once

#include <vector>

#include "casent/materials.hpp"

namespace casent {

enum class TailMethod { euler_maclaurin, truncate };

struct NumericControls {
  double quad_rel_tol = 1e-9;
  double sum_rel_tol = 1e-8;
  long max_matsubara_terms = 5'000'000;
  TailMethod tail_method = TailMethod::euler_maclaurin;

  void validate() const;  // 0 < tolerances <= 1e-3, max terms >= 1e3
};

/// One two-plate configuration: separation, metal response, numeric controls.
struct PlateSystem {
  double separation_m = 1e-6;
  PermittivityModel permittivity;
  NumericControls numeric;

  void validate() const;  // separation > 0
};

struct ReflectionCoefficients {
  double r_tm;
  double r_te;
};

/// Fresnel coefficients at imaginary frequency in dimensionless variables
/// y = 2 a q, y_m = 2 a zeta_m / c:
///   r_tm = (eps y - s) / (eps y + s),  r_te = (y - s) / (y + s),
///   s = sqrt(y^2 + (eps - 1) y_m^2).
/// Requires y >= y_m >= 0 and eps >= 1.
ReflectionCoefficients reflection_coeffs(double eps, double y, double y_m);

/// G(zeta) = int_{y_zeta}^inf y [ln(1 - r_tm^2 e^-y) + ln(1 - r_te^2 e^-y)] dy
/// with y_zeta = 2 a zeta / c. Always <= 0; -> 0 as zeta -> inf.
/// zeta = 0 is evaluated through the model-specific limit of the reflection
/// coefficients (Drude: TE term drops, TM term is ideal; plasma: both present),
/// never by evaluating eps at zeta = 0.
double per_frequency_integral(const PlateSystem& system, double zeta_mev,
                              double t_kelvin);

struct FreeEnergyResult {
  double f_j_per_m2 = 0.0;
  double est_error_j_per_m2 = 0.0;
  long terms_used = 0;
};

/// F(a,T) = (kT / 8 pi a^2) [ G(0)/2 + sum_{m>=1} G(zeta_m) ], T > 0.
/// The explicit sum is cut once the Euler-Maclaurin tail estimate is stable
/// to the summation tolerance (tail_method = euler_maclaurin) or once the
/// remaining-tail bound drops below it (tail_method = truncate).
FreeEnergyResult free_energy(const PlateSystem& system, double t_kelvin);

struct FreeEnergyPoint {
  double t_kelvin;
  double f_j_per_m2;
  long terms_used;
  double est_error;
};

struct FreeEnergyCurve {
  std::vector<FreeEnergyPoint> points;
  PlateSystem system;
};

/// F at every grid temperature; points computed independently, in parallel
/// when threads > 1, with the output order fixed by the input order.
FreeEnergyCurve free_energy_curve(const PlateSystem& system,
                                  const std::vector<double>& t_kelvin, int threads = 1);

struct EnergyResult {
  double e_j_per_m2 = 0.0;
  double est_error_j_per_m2 = 0.0;
};

/// E(a) = (hbar c / 32 pi^2 a^3) int_0^inf G((c/2a) x) dx.
/// Drude variants use nu = nu(0) of the relaxation model (the residual
/// value, possibly 0 for a perfect lattice).
EnergyResult zero_temperature_energy(const PlateSystem& system);

struct ThermalCorrection {
  double delta_f_j_per_m2 = 0.0;
  double est_error_j_per_m2 = 0.0;
  bool meaningful = false;  // est_error < |delta F| / 10
};

/// Delta F(T) = F(a,T) - E(a), as a difference of two separately converged
/// quantities. Throws CancellationError when |Delta F| falls below the
/// combined error estimate.
ThermalCorrection thermal_correction(const PlateSystem& system, double t_kelvin);

namespace detail {

/// Matsubara sum with a fixed number of explicit terms and the tail attached
/// at exactly that index. Entropy differentiation pins the term count across
/// its temperature nodes so the discretization error varies smoothly with T.
FreeEnergyResult free_energy_pinned(const PlateSystem& system, double t_kelvin,
                                    long explicit_terms);

/// free_energy with an explicit stopping tolerance (difference paths tighten
/// it well below NumericControls::sum_rel_tol).
FreeEnergyResult free_energy_with_tol(const PlateSystem& system, double t_kelvin,
                                      double sum_rel_tol);

/// thermal_correction against a precomputed zero-temperature energy, so curve
/// and fit sweeps evaluate E(a) once per system.
ThermalCorrection thermal_correction_given(const PlateSystem& system, double t_kelvin,
                                           const EnergyResult& e0);

}  // namespace detail

}  // namespace casent
