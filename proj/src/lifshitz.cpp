#include "casent/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casent/errors.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"

namespace casent {

namespace {

constexpr double kZeta3 = 1.2020569031595942854;  // Apery's constant

// Inner y-integral: panel grading and truncation. The integrand decays as
// e^-y, so 80 units past the lower limit bounds the dropped tail at ~1e-33
// relative; the 1e-12 first panel resolves the y ln y behavior that appears
// when a reflection coefficient reaches 1 at the lower limit.
constexpr double kInnerSpan = 80.0;
constexpr double kInnerFirstPanel = 1e-12;
// Outer integrals over the frequency variable x = 2 a zeta / c: the first
// panel must resolve the Drude crossover scale x_nu = 2 a nu / c, which can
// sit many decades below 1 for small residual relaxation.
constexpr double kOuterFirstPanel = 1e-14;
constexpr double kPanelRatio = 4.0;
// Beyond this x the whole integral is below 1e-50 of the leading terms.
constexpr double kFrequencyCut = 120.0;

// Dielectric response frozen at one temperature. For Drude, nu has already
// been evaluated at the relevant T (or at 0 for the continuum integral);
// nu = 0 reduces to the plasma form exactly.
struct Kernel {
  bool drude = false;
  double wp_mev = 0.0;
  double nu_mev = 0.0;
  double scale_x = 0.0;  // x per meV of zeta: 2a / (hbar_meVs * c)

  double eta(double zeta_mev) const {
    // (eps - 1) * y_zeta^2, written in a form free of the zeta -> 0 blowup
    const double w = scale_x * wp_mev;
    if (!drude) return w * w;
    return w * w * zeta_mev / (zeta_mev + nu_mev);
  }
  double inv_eps(double zeta_mev) const {
    const double wp2 = wp_mev * wp_mev;
    const double denom =
        drude ? zeta_mev * (zeta_mev + nu_mev) : zeta_mev * zeta_mev;
    return 1.0 / (1.0 + wp2 / denom);
  }
};

Kernel make_kernel(const PlateSystem& sys, double nu_mev) {
  Kernel k;
  k.drude = sys.permittivity.kind == PermittivityKind::drude;
  k.wp_mev = sys.permittivity.omega_p_mev;
  k.nu_mev = nu_mev;
  k.scale_x = 2.0 * sys.separation_m /
              (constants.mev_per_radps * constants.light_speed_m_per_s);
  return k;
}

double nu_for(const PlateSystem& sys, double t_kelvin) {
  if (sys.permittivity.kind != PermittivityKind::drude) return 0.0;
  return nu_at(sys.permittivity.relaxation, t_kelvin).mev;
}

// G(zeta) for zeta > 0.
double g_value(const Kernel& k, double zeta_mev, int split = 1) {
  const double x = k.scale_x * zeta_mev;
  if (x > kFrequencyCut) return 0.0;
  const double eta = k.eta(zeta_mev);
  const double inv_eps = k.inv_eps(zeta_mev);
  auto f = [x, eta, inv_eps](double y) {
    const double s = std::sqrt(y * y + eta);
    const double t = s * inv_eps;
    const double r_te = (y - s) / (y + s);
    const double r_tm = (y - t) / (y + t);
    const double e = std::exp(-y);
    return y * (std::log1p(-r_tm * r_tm * e) + std::log1p(-r_te * r_te * e));
  };
  return detail::graded_panels(f, x, kInnerFirstPanel, kInnerSpan, kPanelRatio, split);
}

// G at zero frequency, by the model-specific limits. Drude with nu > 0 loses
// the TE term and its TM coefficient is 1, so the integral is -zeta(3)
// exactly. Plasma (and Drude with nu = 0) keeps a TE contribution with
// eta = (2 a wp / c)^2.
double g_zero(const Kernel& k, int split = 1) {
  if (k.drude && k.nu_mev > 0.0) return -kZeta3;
  const double w = k.scale_x * k.wp_mev;
  const double eta = w * w;
  auto f = [eta](double y) {
    const double s = std::sqrt(y * y + eta);
    const double r_te = (y - s) / (y + s);
    const double e = std::exp(-y);
    return y * (std::log1p(-e) + std::log1p(-r_te * r_te * e));
  };
  return detail::graded_panels(f, 0.0, kInnerFirstPanel, kInnerSpan, kPanelRatio, split);
}

// int_{x_lo}^inf G dx (x units).
double g_integral_x(const Kernel& k, double x_lo, int split = 1) {
  auto f = [&k](double x) { return g_value(k, x / k.scale_x); };
  return detail::graded_panels(f, x_lo, kOuterFirstPanel, kInnerSpan, kPanelRatio, split);
}

// Remaining-tail bound for truncate mode: |G(zeta)| <= 2 (y + 2) e^-y once
// y >= 1, summed in closed form over m > n.
double truncated_tail_bound(double x1, long n) {
  const double q = std::exp(-x1);
  const double one_minus_q = -std::expm1(-x1);
  const double qn1 = std::exp(-x1 * static_cast<double>(n + 1));
  const double sum_geo = qn1 / one_minus_q;
  const double sum_m = qn1 * ((n + 1) - static_cast<double>(n) * q) /
                       (one_minus_q * one_minus_q);
  return 2.0 * (x1 * sum_m + 2.0 * sum_geo);
}

struct SumOptions {
  double rel_tol = 1e-8;
  long pinned_terms = 0;  // > 0: exactly this many explicit terms, no search
};

// F(a,T) = pref * [ G0/2 + sum_{m>=1} G_m + tail ].
//
// tail_method = euler_maclaurin: at checkpoints n the remaining sum is
// replaced by (1/dz) int_{zeta_n}^inf G dzeta - G_n/2 - (G_{n+1}-G_{n-1})/24;
// convergence is two consecutive checkpoint candidates stable to rel_tol.
// All of G is smooth on [zeta_1, inf) regardless of the relaxation scale, so
// the correction terms shrink like 1/n^2 and a few hundred explicit terms
// suffice at any temperature.
//
// tail_method = truncate: the tail is dropped once its closed-form bound
// falls below rel_tol (slow at low temperature; kept as a cross-check).
FreeEnergyResult matsubara_sum(const PlateSystem& sys, double t_kelvin,
                               const SumOptions& opt) {
  sys.validate();
  if (!(t_kelvin > 0))
    throw std::invalid_argument("free_energy: T must be > 0");

  const Kernel kern = make_kernel(sys, nu_for(sys, t_kelvin));
  const double dz = matsubara_spacing_mev_per_k() * t_kelvin;  // meV
  const double x1 = kern.scale_x * dz;
  const double pref = constants.boltzmann_j_per_k * t_kelvin /
                      (8.0 * std::numbers::pi * sys.separation_m * sys.separation_m);
  const bool em = sys.numeric.tail_method == TailMethod::euler_maclaurin;
  const long max_terms = sys.numeric.max_matsubara_terms;

  // one-shot quadrature self-check on the first frequency
  {
    const double g1 = g_value(kern, dz, 1);
    const double g1r = g_value(kern, dz, 2);
    if (std::fabs(g1r) > 1e-30 &&
        std::fabs(g1r - g1) > sys.numeric.quad_rel_tol * std::fabs(g1r))
      throw ConvergenceError("free_energy: frequency integral failed its self-check");
  }

  double sum = 0.5 * g_zero(kern);
  double comp = 0.0;  // Kahan compensation
  auto add = [&sum, &comp](double v) {
    const double t = sum + v;
    comp += (std::fabs(sum) >= std::fabs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };

  double g_prev = 0.0, g_cur = 0.0;
  double pending_next = 0.0;
  bool have_pending = false;
  double cand_prev = 0.0, delta = 0.0;
  bool have_cand = false;
  int stable = 0;
  long next_cp = opt.pinned_terms > 0 ? opt.pinned_terms : 64;

  for (long m = 1;; ++m) {
    if (m > max_terms)
      throw ConvergenceError("free_energy: max_matsubara_terms exceeded before convergence");
    g_prev = g_cur;
    g_cur = have_pending ? pending_next : g_value(kern, dz * m);
    have_pending = false;
    add(g_cur);

    const bool cut = kern.scale_x * dz * m > kFrequencyCut;  // all later terms vanish
    if (m == next_cp || cut) {
      double tail = 0.0, bound = 0.0;
      if (em) {
        pending_next = g_value(kern, dz * (m + 1));
        have_pending = true;
        const double integ = g_integral_x(kern, kern.scale_x * dz * m) / (kern.scale_x * dz);
        tail = integ - 0.5 * g_cur - (pending_next - g_prev) / 24.0;
      } else {
        bound = truncated_tail_bound(x1, m);
      }
      const double cand = sum + comp + tail;
      if (have_cand) delta = std::fabs(cand - cand_prev);
      const double floor_est = 1e-15 * std::fabs(cand);

      if (opt.pinned_terms > 0)
        return {pref * cand, pref * std::max(delta, floor_est), m};

      bool done = false;
      if (cut) {
        done = true;
      } else if (em) {
        if (have_cand && delta <= opt.rel_tol * std::fabs(cand))
          ++stable;
        else
          stable = 0;
        done = stable >= 2;
      } else {
        done = x1 * m >= 5.0 && bound <= opt.rel_tol * std::fabs(cand);
      }
      cand_prev = cand;
      have_cand = true;

      if (done) {
        double est = std::max(delta, floor_est);
        if (em) {
          // refinement probe on the tail integral
          const double i1 = g_integral_x(kern, kern.scale_x * dz * m, 1);
          const double i2 = g_integral_x(kern, kern.scale_x * dz * m, 2);
          est += std::fabs(i2 - i1) / (kern.scale_x * dz);
        } else {
          est = std::max(est, bound);
        }
        return {pref * cand, pref * est, m};
      }
      next_cp = static_cast<long>(std::ceil(next_cp * 1.5));
    }
  }
}

}  // namespace

void NumericControls::validate() const {
  if (!(quad_rel_tol > 0) || quad_rel_tol > 1e-3)
    throw std::invalid_argument("NumericControls: quad_rel_tol must be in (0, 1e-3]");
  if (!(sum_rel_tol > 0) || sum_rel_tol > 1e-3)
    throw std::invalid_argument("NumericControls: sum_rel_tol must be in (0, 1e-3]");
  if (max_matsubara_terms < 1000)
    throw std::invalid_argument("NumericControls: max_matsubara_terms must be >= 1e3");
}

void PlateSystem::validate() const {
  if (!(separation_m > 0))
    throw std::invalid_argument("PlateSystem: separation must be > 0");
  numeric.validate();
}

ReflectionCoefficients reflection_coeffs(double eps, double y, double y_m) {
  if (!(eps >= 1.0)) throw std::invalid_argument("reflection_coeffs: eps must be >= 1");
  if (y_m < 0 || y < y_m)
    throw std::invalid_argument("reflection_coeffs: requires y >= y_m >= 0");
  if (y == 0.0) return {0.0, 0.0};
  const double s = std::sqrt(y * y + (eps - 1.0) * y_m * y_m);
  return {(eps * y - s) / (eps * y + s), (y - s) / (y + s)};
}

double per_frequency_integral(const PlateSystem& system, double zeta_mev,
                              double t_kelvin) {
  system.validate();
  if (zeta_mev < 0) throw std::invalid_argument("per_frequency_integral: zeta must be >= 0");
  const Kernel kern = make_kernel(system, nu_for(system, t_kelvin));
  const double base = zeta_mev == 0.0 ? g_zero(kern, 1) : g_value(kern, zeta_mev, 1);
  const double fine = zeta_mev == 0.0 ? g_zero(kern, 2) : g_value(kern, zeta_mev, 2);
  if (std::fabs(fine) > 1e-300 &&
      std::fabs(fine - base) > system.numeric.quad_rel_tol * std::fabs(fine))
    throw ConvergenceError("per_frequency_integral: quadrature failed to converge");
  return fine;
}

FreeEnergyResult free_energy(const PlateSystem& system, double t_kelvin) {
  SumOptions opt;
  opt.rel_tol = system.numeric.sum_rel_tol;
  return matsubara_sum(system, t_kelvin, opt);
}

FreeEnergyCurve free_energy_curve(const PlateSystem& system,
                                  const std::vector<double>& t_kelvin, int threads) {
  FreeEnergyCurve curve;
  curve.system = system;
  curve.points.resize(t_kelvin.size());
  detail::parallel_for_index(t_kelvin.size(), threads, [&](std::size_t i) {
    const FreeEnergyResult r = free_energy(system, t_kelvin[i]);
    curve.points[i] = {t_kelvin[i], r.f_j_per_m2, r.terms_used, r.est_error_j_per_m2};
  });
  return curve;
}

EnergyResult zero_temperature_energy(const PlateSystem& system) {
  system.validate();
  const Kernel kern = make_kernel(system, nu_for(system, 0.0));
  const double i1 = g_integral_x(kern, 0.0, 1);
  const double i2 = g_integral_x(kern, 0.0, 2);
  if (std::fabs(i2 - i1) > std::max(system.numeric.quad_rel_tol, 1e-11) * std::fabs(i2))
    throw ConvergenceError("zero_temperature_energy: quadrature failed to converge");
  const double a = system.separation_m;
  const double pref = constants.hbar_j_s * constants.light_speed_m_per_s /
                      (32.0 * std::numbers::pi * std::numbers::pi * a * a * a);
  const double est = std::max(std::fabs(i2 - i1), 1e-15 * std::fabs(i2));
  return {pref * i2, pref * est};
}

ThermalCorrection thermal_correction(const PlateSystem& system, double t_kelvin) {
  return detail::thermal_correction_given(system, t_kelvin,
                                          zero_temperature_energy(system));
}

namespace detail {

FreeEnergyResult free_energy_pinned(const PlateSystem& system, double t_kelvin,
                                    long explicit_terms) {
  if (explicit_terms < 1)
    throw std::invalid_argument("free_energy_pinned: need at least one explicit term");
  SumOptions opt;
  opt.pinned_terms = explicit_terms;
  return matsubara_sum(system, t_kelvin, opt);
}

FreeEnergyResult free_energy_with_tol(const PlateSystem& system, double t_kelvin,
                                      double sum_rel_tol) {
  SumOptions opt;
  opt.rel_tol = sum_rel_tol;
  return matsubara_sum(system, t_kelvin, opt);
}

ThermalCorrection thermal_correction_given(const PlateSystem& system, double t_kelvin,
                                           const EnergyResult& e0) {
  if (!(t_kelvin > 0))
    throw std::invalid_argument("thermal_correction: T must be > 0");
  // The correction is orders of magnitude below either half, so the sum is
  // driven to its numerical floor rather than to the user tolerance.
  const double tol = std::min(system.numeric.sum_rel_tol, 1e-13);
  const FreeEnergyResult f = free_energy_with_tol(system, t_kelvin, tol);
  const double delta_f = f.f_j_per_m2 - e0.e_j_per_m2;
  const double est = f.est_error_j_per_m2 + e0.est_error_j_per_m2;
  if (std::fabs(delta_f) < est)
    throw CancellationError(
        "thermal_correction: |Delta F| fell below the combined error estimate");
  return {delta_f, est, est < std::fabs(delta_f) / 10.0};
}

}  // namespace detail

}  // namespace casent
