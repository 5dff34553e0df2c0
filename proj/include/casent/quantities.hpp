#pragma once

#include <vector>

namespace casent {

/// Physical constants, CODATA-2018, fixed at 9 significant digits.
/// Frequencies are carried in meV everywhere in this library; conversion to
/// rad/s happens only at the quadrature boundary.
struct Constants {
  double boltzmann_j_per_k;    // k
  double hbar_j_s;             // hbar
  double light_speed_m_per_s;  // c
  double mev_per_radps;        // hbar expressed in meV s
};

inline constexpr Constants constants{
    1.38064900e-23,
    1.05457182e-34,
    299792458.0,
    6.58211957e-13,
};

enum class FrequencyKind { matsubara, relaxation, plasma };

struct FrequencyBasis {
  FrequencyKind kind = FrequencyKind::matsubara;
  int m = 0;              // Matsubara index (kind == matsubara)
  double t_kelvin = 0.0;  // temperature of the ladder (kind == matsubara)
};

/// An angular frequency expressed in energy units (meV), tagged by origin.
struct FrequencyValue {
  double mev = 0.0;
  FrequencyBasis basis;
};

/// zeta_1(T)/T: Matsubara ladder spacing per kelvin, meV/K.
double matsubara_spacing_mev_per_k();

/// zeta_m(T) = 2 pi k m T / hbar in meV; exactly 0 for m == 0 or T == 0.
FrequencyValue matsubara_frequency(int m, double t_kelvin);

/// meV -> rad/s; inverse round-trips to 1e-12 relative error.
double mev_to_radps(double mev);
double radps_to_mev(double radps);

/// zeta_1 .. zeta_count, strictly increasing, uniformly spaced by zeta_1.
/// Rejects T = 0 (the ladder degenerates; the zero-temperature continuum
/// integral applies instead).
std::vector<FrequencyValue> matsubara_ladder(double t_kelvin, int count);

}  // namespace casent
