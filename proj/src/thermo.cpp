#include "casent/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "casent/errors.hpp"
#include "parallel.hpp"
#include "stats.hpp"

namespace casent {

std::string to_string(NernstClass c) {
  switch (c) {
    case NernstClass::satisfied_smooth: return "satisfied_smooth";
    case NernstClass::satisfied_with_negative_dip: return "satisfied_with_negative_dip";
    case NernstClass::violated_negative_limit: return "violated_negative_limit";
  }
  return "unknown";
}

EntropyResult entropy(const PlateSystem& system, double t_kelvin, double step_k) {
  if (!(step_k > 0) || !(t_kelvin > step_k))
    throw std::invalid_argument("entropy: requires T > step > 0");

  // Converge once at the base temperature, then reuse the explicit term
  // count at all four nodes so the tail-switch index cannot jump between
  // them. nu(T) is still re-evaluated per node inside free_energy_pinned.
  const double tol = std::min(system.numeric.sum_rel_tol, 1e-13);
  const FreeEnergyResult base = detail::free_energy_with_tol(system, t_kelvin, tol);
  const long pin = base.terms_used;
  auto f = [&](double t) {
    return detail::free_energy_pinned(system, t, pin).f_j_per_m2;
  };

  const double h = step_k;
  const double d1 = (f(t_kelvin + h) - f(t_kelvin - h)) / (2.0 * h);
  const double d2 = (f(t_kelvin + 0.5 * h) - f(t_kelvin - 0.5 * h)) / h;
  const double dr = (4.0 * d2 - d1) / 3.0;

  EntropyResult r;
  r.s_j_per_m2_k = -dr;
  r.step_used_k = step_k;
  const double discrepancy = std::fabs(dr - d2);
  const double noise = 2.0 * base.est_error_j_per_m2 / h;
  r.est_error = discrepancy + noise;
  r.step_dominated = discrepancy > 0.1 * std::fabs(r.s_j_per_m2_k);
  return r;
}

EntropyResult entropy(const PlateSystem& system, double t_kelvin) {
  return entropy(system, t_kelvin, t_kelvin / 20.0);
}

std::vector<EntropyPoint> entropy_grid(const PlateSystem& system,
                                       const std::vector<double>& t_grid_k,
                                       int threads) {
  std::vector<EntropyPoint> pts(t_grid_k.size());
  detail::parallel_for_index(t_grid_k.size(), threads, [&](std::size_t i) {
    const double t = t_grid_k[i];
    const EntropyResult r = entropy(system, t);
    pts[i] = {t, r.s_j_per_m2_k, r.step_used_k, r.est_error};
  });
  return pts;
}

NernstVerdict classify_from_points(const std::vector<EntropyPoint>& points) {
  if (points.size() < 8)
    throw std::invalid_argument("classify_nernst: need at least 8 grid points");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i].t_kelvin < points[i - 1].t_kelvin) || !(points[i].t_kelvin > 0))
      throw std::invalid_argument("classify_nernst: grid must decrease strictly toward 0");
  const double t_min = points.back().t_kelvin;
  if (points.front().t_kelvin < 100.0 * t_min * (1.0 - 1e-9))
    throw std::invalid_argument("classify_nernst: grid must span at least 2 decades");

  // weighted linear fit S = s0 + s1 T over the lowest decade
  std::vector<double> ts, ss, sig;
  for (const auto& p : points) {
    if (p.t_kelvin <= 10.0 * t_min * (1.0 + 1e-9)) {
      ts.push_back(p.t_kelvin);
      ss.push_back(p.s_j_per_m2_k);
      sig.push_back(p.est_error);
    }
  }
  if (ts.size() < 3)
    throw std::invalid_argument("classify_nernst: fewer than 3 points in the lowest decade");
  const detail::LinearFit fit = detail::weighted_linear_fit(ts, ss, sig);
  const double inflate = std::sqrt(std::max(1.0, fit.chi2 / std::max(1, fit.dof)));
  const double s0 = fit.a;
  const double s0_err = std::sqrt(fit.var_a) * inflate;

  bool dip = false;
  for (const auto& p : points)
    if (p.s_j_per_m2_k < -3.0 * p.est_error) dip = true;

  NernstVerdict v;
  v.s_limit_estimate = s0;
  v.s_limit_error = s0_err;
  v.evidence_t_lo_k = t_min;
  v.evidence_t_hi_k = 10.0 * t_min;
  if (s0 < -3.0 * s0_err)
    v.classification = NernstClass::violated_negative_limit;
  else if (dip)
    v.classification = NernstClass::satisfied_with_negative_dip;
  else
    v.classification = NernstClass::satisfied_smooth;
  return v;
}

NernstVerdict classify_nernst(const PlateSystem& system,
                              const std::vector<double>& t_grid_k, int threads) {
  if (t_grid_k.size() < 8)
    throw std::invalid_argument("classify_nernst: need at least 8 grid points");
  return classify_from_points(entropy_grid(system, t_grid_k, threads));
}

}  // namespace casent
