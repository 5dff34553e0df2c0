#include "casent/quantities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casent {

double matsubara_spacing_mev_per_k() {
  // 2 pi k / hbar, expressed in meV per kelvin.
  return 2.0 * std::numbers::pi * constants.boltzmann_j_per_k / constants.hbar_j_s *
         constants.mev_per_radps;
}

FrequencyValue matsubara_frequency(int m, double t_kelvin) {
  if (m < 0) throw std::invalid_argument("matsubara_frequency: m must be >= 0");
  if (t_kelvin < 0) throw std::invalid_argument("matsubara_frequency: T must be >= 0");
  const double mev = (m == 0 || t_kelvin == 0.0)
                         ? 0.0
                         : matsubara_spacing_mev_per_k() * m * t_kelvin;
  return {mev, {FrequencyKind::matsubara, m, t_kelvin}};
}

double mev_to_radps(double mev) {
  if (mev < 0) throw std::invalid_argument("mev_to_radps: negative frequency");
  return mev / constants.mev_per_radps;
}

double radps_to_mev(double radps) {
  if (radps < 0) throw std::invalid_argument("radps_to_mev: negative frequency");
  return radps * constants.mev_per_radps;
}

std::vector<FrequencyValue> matsubara_ladder(double t_kelvin, int count) {
  if (count < 1) throw std::invalid_argument("matsubara_ladder: count must be >= 1");
  if (!(t_kelvin > 0))
    throw std::invalid_argument("matsubara_ladder: T must be > 0 (the ladder degenerates at T = 0)");
  std::vector<FrequencyValue> ladder;
  ladder.reserve(count);
  const double zeta1 = matsubara_spacing_mev_per_k() * t_kelvin;
  for (int m = 1; m <= count; ++m)
    ladder.push_back({zeta1 * m, {FrequencyKind::matsubara, m, t_kelvin}});
  return ladder;
}

}  // namespace casent
