#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace casent::detail {

// Weighted least squares for y = a + b x.
struct LinearFit {
  double a = 0.0, b = 0.0;
  double var_a = 0.0, var_b = 0.0, cov_ab = 0.0;
  double chi2 = 0.0;
  int dof = 0;
};

inline LinearFit weighted_linear_fit(const std::vector<double>& x,
                                     const std::vector<double>& y,
                                     const std::vector<double>& sigma) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n || sigma.size() != n)
    throw std::invalid_argument("weighted_linear_fit: need >= 2 matched points");

  // Floor vanishing sigmas at a fraction of the largest one so exact points
  // do not acquire infinite weight.
  double sig_max = 0.0;
  for (double s : sigma) sig_max = std::max(sig_max, std::fabs(s));
  const double sig_floor = sig_max > 0 ? 1e-6 * sig_max : 1.0;

  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::max(std::fabs(sigma[i]), sig_floor);
    const double w = 1.0 / (s * s);
    sw += w;
    swx += w * x[i];
    swy += w * y[i];
    swxx += w * x[i] * x[i];
    swxy += w * x[i] * y[i];
  }
  const double det = sw * swxx - swx * swx;
  if (!(std::fabs(det) > 0))
    throw std::invalid_argument("weighted_linear_fit: degenerate abscissae");

  LinearFit f;
  f.a = (swxx * swy - swx * swxy) / det;
  f.b = (sw * swxy - swx * swy) / det;
  f.var_a = swxx / det;
  f.var_b = sw / det;
  f.cov_ab = -swx / det;
  f.dof = static_cast<int>(n) - 2;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::max(std::fabs(sigma[i]), sig_floor);
    const double r = (y[i] - f.a - f.b * x[i]) / s;
    f.chi2 += r * r;
  }
  return f;
}

}  // namespace casent::detail
