#pragma once

#include "casent/quantities.hpp"

namespace casent {

enum class RelaxationKind { constant, bloch_gruneisen, bloch_gruneisen_residual };

/// Relaxation frequency nu(T) of the plate metal, meV.
///
/// The pure bloch_gruneisen variant (no residual term) models a perfect
/// crystal lattice: nu(T) ~ T^5 at low temperature, ~T above roughly a
/// quarter of the Debye temperature, and nu(0) = 0. Impure lattices keep a
/// temperature-independent residual nu0 > 0 on top of the phonon term
/// (Matthiessen composition).
struct RelaxationModel {
  RelaxationKind kind = RelaxationKind::constant;
  double nu0_mev = 0.0;       // constant value / residual floor
  double debye_t_k = 0.0;     // Bloch-Gruneisen temperature scale
  double calib_t_k = 0.0;     // calibration point: nu(calib_t) = calib_nu
  double calib_nu_mev = 0.0;

  static RelaxationModel constant(double nu0_mev);
  static RelaxationModel bloch_gruneisen(double debye_t_k, double calib_t_k,
                                         double calib_nu_mev);
  static RelaxationModel bloch_gruneisen_residual(double debye_t_k, double calib_t_k,
                                                  double calib_nu_mev, double nu0_mev);
};

enum class PermittivityKind { drude, plasma };

/// Dielectric function along the imaginary frequency axis:
///   drude:  eps(i zeta) = 1 + wp^2 / (zeta (zeta + nu(T)))
///   plasma: eps(i zeta) = 1 + wp^2 / zeta^2
struct PermittivityModel {
  PermittivityKind kind = PermittivityKind::drude;
  double omega_p_mev = 0.0;
  RelaxationModel relaxation;  // used by drude only

  static PermittivityModel drude(double omega_p_mev, RelaxationModel relaxation);
  static PermittivityModel plasma(double omega_p_mev);
};

/// Phonon part: A (T/T_D)^5 * int_0^{T_D/T} x^5 e^x / (e^x - 1)^2 dx, with A
/// calibrated so nu(calib_t) = calib_nu. The residual variant adds nu0.
/// Returns nu0 (or 0) at T = 0.
FrequencyValue bloch_gruneisen_nu(const RelaxationModel& model, double t_kelvin);

/// Dispatch on variant; monotone nondecreasing in T.
FrequencyValue nu_at(const RelaxationModel& model, double t_kelvin);

/// eps(i zeta) for zeta > 0 (meV). Always > 1 and strictly decreasing in
/// zeta. The zeta = 0 limits are model-specific and live with the reflection
/// coefficients, not here.
double permittivity_imag_axis(const PermittivityModel& model, double zeta_mev,
                              double t_kelvin);

}  // namespace casent
