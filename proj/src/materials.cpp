#include "casent/materials.hpp"

#include <cmath>
#include <stdexcept>

#include "casent/errors.hpp"
#include "quadrature.hpp"

namespace casent {

namespace {

// int_0^inf x^5 e^x / (e^x - 1)^2 dx = 120 zeta(5)
constexpr double kBgIntegralFull = 124.4313306172044;
// beyond this upper limit the remaining tail is below 1e-13 of the total
constexpr double kBgTailCut = 50.0;

double bg_integrand(double x) {
  // x^5 e^x / (e^x - 1)^2 = x^5 / (4 sinh^2(x/2)); ~ x^3 as x -> 0
  if (x < 1e-8) return x * x * x;
  const double sh = 2.0 * std::sinh(0.5 * x);
  return x * x * x * x * x / (sh * sh);
}

// int_0^u of the integrand above, to ~machine accuracy with a refinement
// self-check at 1e-8 relative.
double bg_integral(double u) {
  if (u >= kBgTailCut) return kBgIntegralFull;
  const int panels = std::max(2, static_cast<int>(std::ceil(u / 5.0)));
  const double coarse = detail::uniform_panels(bg_integrand, 0.0, u, panels, 1);
  const double fine = detail::uniform_panels(bg_integrand, 0.0, u, panels, 2);
  if (std::fabs(fine - coarse) > 1e-8 * std::fabs(fine))
    throw ConvergenceError("bloch_gruneisen_nu: quadrature failed to converge");
  return fine;
}

double bg_phonon_term(const RelaxationModel& m, double t_kelvin) {
  if (t_kelvin <= 0) return 0.0;
  const double ratio_calib = m.calib_t_k / m.debye_t_k;
  const double amplitude =
      m.calib_nu_mev /
      (ratio_calib * ratio_calib * ratio_calib * ratio_calib * ratio_calib *
       bg_integral(m.debye_t_k / m.calib_t_k));
  const double r = t_kelvin / m.debye_t_k;
  return amplitude * r * r * r * r * r * bg_integral(m.debye_t_k / t_kelvin);
}

}  // namespace

RelaxationModel RelaxationModel::constant(double nu0_mev) {
  if (!(nu0_mev > 0))
    throw std::invalid_argument(
        "RelaxationModel::constant: nu0 must be > 0 (a vanishing relaxation "
        "is the pure bloch_gruneisen variant)");
  RelaxationModel m;
  m.kind = RelaxationKind::constant;
  m.nu0_mev = nu0_mev;
  return m;
}

RelaxationModel RelaxationModel::bloch_gruneisen(double debye_t_k, double calib_t_k,
                                                 double calib_nu_mev) {
  if (!(debye_t_k > 0) || !(calib_t_k > 0))
    throw std::invalid_argument("RelaxationModel::bloch_gruneisen: temperatures must be > 0");
  if (!(calib_nu_mev > 0))
    throw std::invalid_argument("RelaxationModel::bloch_gruneisen: calibration nu must be > 0");
  RelaxationModel m;
  m.kind = RelaxationKind::bloch_gruneisen;
  m.debye_t_k = debye_t_k;
  m.calib_t_k = calib_t_k;
  m.calib_nu_mev = calib_nu_mev;
  return m;
}

RelaxationModel RelaxationModel::bloch_gruneisen_residual(double debye_t_k,
                                                          double calib_t_k,
                                                          double calib_nu_mev,
                                                          double nu0_mev) {
  if (!(nu0_mev > 0))
    throw std::invalid_argument(
        "RelaxationModel::bloch_gruneisen_residual: nu0 must be > 0");
  RelaxationModel m = bloch_gruneisen(debye_t_k, calib_t_k, calib_nu_mev);
  m.kind = RelaxationKind::bloch_gruneisen_residual;
  m.nu0_mev = nu0_mev;
  return m;
}

PermittivityModel PermittivityModel::drude(double omega_p_mev, RelaxationModel relaxation) {
  if (!(omega_p_mev > 0))
    throw std::invalid_argument("PermittivityModel::drude: omega_p must be > 0");
  PermittivityModel p;
  p.kind = PermittivityKind::drude;
  p.omega_p_mev = omega_p_mev;
  p.relaxation = relaxation;
  return p;
}

PermittivityModel PermittivityModel::plasma(double omega_p_mev) {
  if (!(omega_p_mev > 0))
    throw std::invalid_argument("PermittivityModel::plasma: omega_p must be > 0");
  PermittivityModel p;
  p.kind = PermittivityKind::plasma;
  p.omega_p_mev = omega_p_mev;
  return p;
}

FrequencyValue bloch_gruneisen_nu(const RelaxationModel& model, double t_kelvin) {
  if (t_kelvin < 0) throw std::invalid_argument("bloch_gruneisen_nu: T must be >= 0");
  if (model.kind == RelaxationKind::constant)
    throw std::invalid_argument("bloch_gruneisen_nu: model has no phonon term");
  const double nu = bg_phonon_term(model, t_kelvin) +
                    (model.kind == RelaxationKind::bloch_gruneisen_residual ? model.nu0_mev : 0.0);
  return {nu, {FrequencyKind::relaxation}};
}

FrequencyValue nu_at(const RelaxationModel& model, double t_kelvin) {
  if (t_kelvin < 0) throw std::invalid_argument("nu_at: T must be >= 0");
  if (model.kind == RelaxationKind::constant)
    return {model.nu0_mev, {FrequencyKind::relaxation}};
  return bloch_gruneisen_nu(model, t_kelvin);
}

double permittivity_imag_axis(const PermittivityModel& model, double zeta_mev,
                              double t_kelvin) {
  if (!(zeta_mev > 0))
    throw std::invalid_argument(
        "permittivity_imag_axis: zeta must be > 0 (the zeta = 0 limit is "
        "handled by the reflection coefficients)");
  const double wp2 = model.omega_p_mev * model.omega_p_mev;
  if (model.kind == PermittivityKind::plasma) return 1.0 + wp2 / (zeta_mev * zeta_mev);
  const double nu = nu_at(model.relaxation, t_kelvin).mev;
  return 1.0 + wp2 / (zeta_mev * (zeta_mev + nu));
}

}  // namespace casent
