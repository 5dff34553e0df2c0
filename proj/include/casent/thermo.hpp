#pragma once

#include <string>
#include <vector>

#include "casent/lifshitz.hpp"

namespace casent {

struct EntropyResult {
  double s_j_per_m2_k = 0.0;
  double est_error = 0.0;
  double step_used_k = 0.0;
  bool step_dominated = false;  // Richardson discrepancy exceeded 10% of |S|
};

/// S(T) = -dF/dT by central differences, Richardson-extrapolated with step
/// and step/2. For Drude + Bloch-Gruneisen, nu is re-evaluated at every
/// temperature node, so the T-dependence of the relaxation contributes.
/// Requires T > step > 0. Default step is T/20.
EntropyResult entropy(const PlateSystem& system, double t_kelvin, double step_k);
EntropyResult entropy(const PlateSystem& system, double t_kelvin);

struct EntropyPoint {
  double t_kelvin;
  double s_j_per_m2_k;
  double step_used_k;
  double est_error;
};

struct EntropyCurve {
  std::vector<EntropyPoint> points;
  PlateSystem system;
};

enum class NernstClass {
  satisfied_smooth,
  satisfied_with_negative_dip,
  violated_negative_limit,
};

std::string to_string(NernstClass c);

struct NernstVerdict {
  NernstClass classification = NernstClass::satisfied_smooth;
  double s_limit_estimate = 0.0;  // linear extrapolation of S to T = 0
  double s_limit_error = 0.0;     // 1-sigma, residual-inflated
  double evidence_t_lo_k = 0.0;   // lowest decade used for the limit fit
  double evidence_t_hi_k = 0.0;
};

/// Classify the T -> 0 behavior of S over a grid that decreases strictly
/// toward zero (>= 8 points spanning >= 2 decades). The limit is a weighted
/// linear fit over the lowest decade; "consistent with zero" means
/// |estimate| <= 3x its error. A dip is any point with S < -3x its point
/// error anywhere on the grid.
NernstVerdict classify_nernst(const PlateSystem& system,
                              const std::vector<double>& t_grid_k, int threads = 1);

/// Entropy at every grid point (the evidence behind a verdict); exposed so
/// emitters and tests can reuse one computation.
std::vector<EntropyPoint> entropy_grid(const PlateSystem& system,
                                       const std::vector<double>& t_grid_k,
                                       int threads = 1);

NernstVerdict classify_from_points(const std::vector<EntropyPoint>& points);

}  // namespace casent
