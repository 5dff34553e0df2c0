#include "casent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casent/errors.hpp"
#include "stats.hpp"

namespace casent {

namespace {

// Empirical fit window in the reduced temperature theta = zeta_1(T)/nu0.
// Below 1e-4 the two-term model holds to ~1e-3 relative residual; the upper
// regime bound zeta_10(T) <= 0.1 nu0 sits a further decade up.
constexpr double kFitThetaLo = 1e-5;
constexpr double kFitThetaHi = 1e-4;

}  // namespace

std::string to_string(FrequencyRelation r) {
  switch (r) {
    case FrequencyRelation::much_less: return "much_less";
    case FrequencyRelation::less: return "less";
    case FrequencyRelation::greater: return "greater";
    case FrequencyRelation::much_greater: return "much_greater";
  }
  return "unknown";
}

RegimeReport regime_report(const RelaxationModel& nu_model, double t_kelvin,
                           int m_max, double strong_ratio) {
  if (!(t_kelvin > 0)) throw std::invalid_argument("regime_report: T must be > 0");
  if (m_max < 1) throw std::invalid_argument("regime_report: m_max must be >= 1");
  if (!(strong_ratio > 0) || strong_ratio > 0.2)
    throw std::invalid_argument("regime_report: strong_ratio must be in (0, 0.2]");

  RegimeReport rep;
  rep.t_kelvin = t_kelvin;
  rep.nu_mev = nu_at(nu_model, t_kelvin).mev;
  rep.strong_ratio = strong_ratio;
  rep.entries.reserve(m_max);
  const double zeta1 = matsubara_spacing_mev_per_k() * t_kelvin;
  for (int m = 1; m <= m_max; ++m) {
    const double zeta = zeta1 * m;
    FrequencyRelation rel;
    if (zeta <= strong_ratio * rep.nu_mev)
      rel = FrequencyRelation::much_less;
    else if (rep.nu_mev <= strong_ratio * zeta)
      rel = FrequencyRelation::much_greater;
    else if (zeta < rep.nu_mev)
      rel = FrequencyRelation::less;
    else
      rel = FrequencyRelation::greater;
    rep.entries.push_back({m, zeta, rel});
  }
  return rep;
}

double crossover_temperature(double nu0_mev, int n_freq, double strong_ratio) {
  if (!(nu0_mev > 0)) throw std::invalid_argument("crossover_temperature: nu0 must be > 0");
  if (n_freq < 1) throw std::invalid_argument("crossover_temperature: n_freq must be >= 1");
  return strong_ratio * nu0_mev / (n_freq * matsubara_spacing_mev_per_k());
}

std::vector<double> default_fit_temperatures(double nu0_mev, int n_points) {
  if (!(nu0_mev > 0)) throw std::invalid_argument("default_fit_temperatures: nu0 must be > 0");
  if (n_points < 6) throw std::invalid_argument("default_fit_temperatures: need >= 6 points");
  const double spacing = matsubara_spacing_mev_per_k();
  const double t_lo = kFitThetaLo * nu0_mev / spacing;
  const double t_hi = kFitThetaHi * nu0_mev / spacing;
  std::vector<double> ts(n_points);
  for (int i = 0; i < n_points; ++i)
    ts[i] = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (n_points - 1));
  return ts;
}

AsymptoticFit fit_asymptotic_coefficients(const PlateSystem& system,
                                          const std::vector<double>& t_points_k,
                                          double strong_ratio) {
  system.validate();
  if (system.permittivity.kind != PermittivityKind::drude ||
      system.permittivity.relaxation.kind != RelaxationKind::constant)
    throw std::invalid_argument(
        "fit_asymptotic_coefficients: requires a Drude model with constant "
        "residual relaxation");
  if (t_points_k.size() < 6)
    throw std::invalid_argument("fit_asymptotic_coefficients: need >= 6 points");
  const auto [lo_it, hi_it] = std::minmax_element(t_points_k.begin(), t_points_k.end());
  const double t_lo = *lo_it, t_hi = *hi_it;
  if (!(t_lo > 0) || t_hi < 10.0 * t_lo * (1.0 - 1e-12))
    throw std::invalid_argument("fit_asymptotic_coefficients: points must span >= 1 decade");

  const double nu0 = system.permittivity.relaxation.nu0_mev;
  const double zeta10_hi = 10.0 * matsubara_spacing_mev_per_k() * t_hi;
  if (zeta10_hi > strong_ratio * nu0)
    throw FitError(
        "fit_asymptotic_coefficients: window violates zeta_10(T_hi) <= "
        "strong_ratio * nu0");

  const EnergyResult e0 = zero_temperature_energy(system);
  std::vector<double> sq_t(t_points_k.size()), u(t_points_k.size()), su(t_points_k.size());
  for (std::size_t i = 0; i < t_points_k.size(); ++i) {
    const double t = t_points_k[i];
    const ThermalCorrection dc = detail::thermal_correction_given(system, t, e0);
    if (!dc.meaningful)
      throw CancellationError(
          "fit_asymptotic_coefficients: Delta F failed the cancellation guard");
    sq_t[i] = std::sqrt(t);
    u[i] = dc.delta_f_j_per_m2 / (t * t);
    su[i] = dc.est_error_j_per_m2 / (t * t);
  }

  const detail::LinearFit lf = detail::weighted_linear_fit(sq_t, u, su);
  if (!(lf.a > 0) || !(lf.b < 0))
    throw FitError("fit_asymptotic_coefficients: fitted signs violate C1 > 0, C2 > 0");

  double mean_abs_u = 0, rms = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = u[i] - lf.a - lf.b * sq_t[i];
    rms += r * r;
    mean_abs_u += std::fabs(u[i]);
  }
  rms = std::sqrt(rms / u.size());
  mean_abs_u /= u.size();
  const double rms_rel = rms / mean_abs_u;
  if (rms_rel > 1e-2)
    throw FitError("fit_asymptotic_coefficients: poor linearity (rms residual > 1e-2)");

  const double inflate2 = std::max(1.0, lf.chi2 / std::max(1, lf.dof));
  AsymptoticFit fit;
  fit.c1 = lf.a;
  fit.c2 = -lf.b / lf.a;
  fit.var_a = lf.var_a * inflate2;
  fit.var_b = lf.var_b * inflate2;
  fit.cov_ab = lf.cov_ab * inflate2;
  fit.c1_err = std::sqrt(fit.var_a);
  // C2 = -b/a: first-order propagation with the full 2x2 covariance
  fit.c2_err = std::fabs(fit.c2) * std::sqrt(std::max(
      0.0, fit.var_a / (lf.a * lf.a) + fit.var_b / (lf.b * lf.b) -
               2.0 * fit.cov_ab / (lf.a * lf.b)));
  fit.t_lo_k = t_lo;
  fit.t_hi_k = t_hi;
  fit.rms_residual = rms_rel;
  fit.separation_m = system.separation_m;
  fit.nu0_mev = nu0;
  return fit;
}

ScalingTable scaling_check(double separation_m, const std::vector<double>& nu0_list_mev,
                           double omega_p_mev, const NumericControls& controls,
                           int fit_points) {
  if (nu0_list_mev.empty())
    throw std::invalid_argument("scaling_check: need at least one nu0");
  ScalingTable table;
  for (double nu0 : nu0_list_mev) {
    PlateSystem sys;
    sys.separation_m = separation_m;
    sys.permittivity =
        PermittivityModel::drude(omega_p_mev, RelaxationModel::constant(nu0));
    sys.numeric = controls;
    const AsymptoticFit fit =
        fit_asymptotic_coefficients(sys, default_fit_temperatures(nu0, fit_points));
    table.rows.push_back(
        {nu0, fit.c1, fit.c2, fit.c1 * nu0, fit.c2 * std::sqrt(nu0)});
  }
  auto spread = [](const std::vector<ScalingRow>& rows, auto get) {
    double lo = get(rows[0]), hi = lo, mean = 0;
    for (const auto& r : rows) {
      lo = std::min(lo, get(r));
      hi = std::max(hi, get(r));
      mean += get(r);
    }
    mean /= rows.size();
    return mean != 0 ? (hi - lo) / std::fabs(mean) : 0.0;
  };
  table.c1_product_spread = spread(table.rows, [](const ScalingRow& r) { return r.c1_nu0; });
  table.c2_product_spread =
      spread(table.rows, [](const ScalingRow& r) { return r.c2_sqrt_nu0; });
  return table;
}

}  // namespace casent
