#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "casent/analysis.hpp"
#include "casent/errors.hpp"
#include "casent/thermo.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casent;

namespace {

PlateSystem plasma_sys(double omega_p_mev = 9000.0) {
  PlateSystem s;
  s.separation_m = 1e-6;
  s.permittivity = PermittivityModel::plasma(omega_p_mev);
  return s;
}

PlateSystem drude_const_sys(double nu0_mev) {
  PlateSystem s;
  s.separation_m = 1e-6;
  s.permittivity = PermittivityModel::drude(9000.0, RelaxationModel::constant(nu0_mev));
  return s;
}

std::vector<double> log_grid(double t_hi, double t_lo, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = t_hi * std::pow(t_lo / t_hi, static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace

TEST_CASE("plasma entropy vanishes toward zero temperature") {
  const PlateSystem sys = plasma_sys();
  for (double t : {0.02, 0.1, 0.5}) {
    const EntropyResult r = entropy(sys, t);
    CHECK(r.s_j_per_m2_k >= -r.est_error);  // never significantly negative
  }
  // magnitude shrinks with T
  CHECK(std::fabs(entropy(sys, 0.05).s_j_per_m2_k) <
        std::fabs(entropy(sys, 0.5).s_j_per_m2_k));
}

TEST_CASE("impure Drude entropy dips negative, then returns to zero") {
  const PlateSystem sys = drude_const_sys(34.5e-3);
  const EntropyResult dip = entropy(sys, 1e-4);
  CHECK(dip.s_j_per_m2_k < -3.0 * dip.est_error);  // well-resolved negative value
  const EntropyResult deep = entropy(sys, 2e-7);
  CHECK(std::fabs(deep.s_j_per_m2_k) < 0.01 * std::fabs(dip.s_j_per_m2_k));
}

TEST_CASE("entropy agrees with the derivative of a spline fit of F(T)") {
  const PlateSystem sys = plasma_sys();
  std::vector<double> ts, fs;
  for (double t = 1.0; t <= 3.01; t += 0.25) {
    ts.push_back(t);
    fs.push_back(free_energy(sys, t).f_j_per_m2);
  }
  const oracles::CubicSpline spline(ts, fs);
  for (double t : {1.6, 2.0, 2.4}) {
    const EntropyResult r = entropy(sys, t);
    const double s_spline = -spline.derivative(t);
    // spline truncation dominates the combined budget on this coarse grid
    const double budget = r.est_error + 2e-3 * std::fabs(s_spline);
    CHECK(std::fabs(r.s_j_per_m2_k - s_spline) <= budget);
  }
}

TEST_CASE("fitted asymptotic form reproduces the direct entropy in-window") {
  const double nu0 = 3.45;
  const PlateSystem sys = drude_const_sys(nu0);
  const AsymptoticFit fit =
      fit_asymptotic_coefficients(sys, default_fit_temperatures(nu0));

  // the fitted form's own zero crossing sits at 16 / (25 C2^2)
  const double t_star = 16.0 / (25.0 * fit.c2 * fit.c2);
  const double a = fit.c1, b = -fit.c1 * fit.c2;
  const double s_model_at_star = -(2.0 * a * t_star + 2.5 * b * std::pow(t_star, 1.5));
  CHECK(std::fabs(s_model_at_star) <= 1e-12 * std::fabs(2.0 * a * t_star));

  // sign sanity just below the window top: Delta F > 0 and S < 0
  const double t_probe = 0.9 * fit.t_hi_k;
  CHECK(thermal_correction(sys, t_probe).delta_f_j_per_m2 > 0.0);
  const EntropyResult s_probe = entropy(sys, t_probe);
  CHECK(s_probe.s_j_per_m2_k < 0.0);

  // direct vs fitted-form values at the window center, loose 20% agreement
  const double t_mid = std::sqrt(fit.t_lo_k * fit.t_hi_k);
  const double s_fit = -(2.0 * a * t_mid + 2.5 * b * std::pow(t_mid, 1.5));
  const EntropyResult s_dir = entropy(sys, t_mid);
  CHECK(std::fabs(s_dir.s_j_per_m2_k - s_fit) <= 0.2 * std::fabs(s_fit));
}

TEST_CASE("nernst classification on a cheap plasma grid") {
  const NernstVerdict v = classify_nernst(plasma_sys(), log_grid(0.5, 1e-3, 8));
  CHECK((v.classification == NernstClass::satisfied_smooth ||
         v.classification == NernstClass::satisfied_with_negative_dip));
  CHECK(std::fabs(v.s_limit_estimate) <= 3.0 * v.s_limit_error);
  CHECK(v.evidence_t_lo_k == doctest::Approx(1e-3));
  CHECK(v.evidence_t_hi_k == doctest::Approx(1e-2));
}

TEST_CASE("classification verdicts carry their invariants") {
  // a violated verdict requires a significantly negative limit; build one
  // from the perfect-lattice system over a plateau-resolving grid
  PlateSystem perfect;
  perfect.separation_m = 1e-6;
  perfect.permittivity = PermittivityModel::drude(
      9000.0, RelaxationModel::bloch_gruneisen(165.0, 300.0, 34.5));
  const NernstVerdict v = classify_nernst(perfect, log_grid(0.5, 5e-3, 8));
  CHECK(v.classification == NernstClass::violated_negative_limit);
  CHECK(v.s_limit_estimate < 0.0);
  CHECK(std::fabs(v.s_limit_estimate) > 3.0 * v.s_limit_error);
}

TEST_CASE("entropy and classification input validation") {
  const PlateSystem sys = plasma_sys();
  CHECK_THROWS_AS(entropy(sys, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(entropy(sys, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(entropy(sys, 0.0), std::invalid_argument);

  CHECK_THROWS_AS(classify_nernst(sys, log_grid(0.5, 1e-3, 5)), std::invalid_argument);
  CHECK_THROWS_AS(classify_nernst(sys, log_grid(0.5, 0.1, 8)), std::invalid_argument);
  auto increasing = log_grid(1e-3, 0.5, 8);  // wrong direction
  CHECK_THROWS_AS(classify_nernst(sys, increasing), std::invalid_argument);
}

TEST_CASE("entropy step bookkeeping") {
  const PlateSystem sys = plasma_sys();
  const EntropyResult r = entropy(sys, 1.0, 0.05);
  CHECK(r.step_used_k == 0.05);
  CHECK(!r.step_dominated);
  CHECK(std::isfinite(r.est_error));
  CHECK(r.est_error > 0.0);
}
