#pragma once

// Test-side numerical oracles, deliberately independent of the library's
// quadrature and summation machinery: plain composite trapezoid / Simpson
// rules on dense fixed grids, and a small natural cubic spline.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

inline double trapezoid(const std::function<double(double)>& f, double a, double b,
                        int n) {
  const double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

// trapezoid on a log-spaced grid, for integrands with structure near a
inline double trapezoid_log(const std::function<double(double)>& f, double a, double b,
                            int n) {
  const double la = std::log(a), lb = std::log(b);
  auto g = [&](double t) {
    const double x = std::exp(t);
    return f(x) * x;  // jacobian
  };
  return trapezoid(g, la, lb, n);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Bloch-Gruneisen integrand, written directly from its definition.
inline double bg_integrand(double x) {
  const double ex = std::exp(x);
  const double d = ex - 1.0;
  return x * x * x * x * x * ex / (d * d);
}

// Lifshitz frequency integrand at imaginary frequency, rebuilt from the
// Fresnel formulas. eps is the permittivity at this frequency, x = 2 a zeta/c.
inline double lifshitz_y_integrand(double eps, double x, double y) {
  const double s = std::sqrt(y * y + (eps - 1.0) * x * x);
  const double r_tm = (eps * y - s) / (eps * y + s);
  const double r_te = (y - s) / (y + s);
  const double e = std::exp(-y);
  return y * (std::log1p(-r_tm * r_tm * e) + std::log1p(-r_te * r_te * e));
}

// G(zeta) by dense trapezoid over y on a log-offset grid.
inline double g_oracle(const std::function<double(double)>& eps_of_zeta, double scale_x,
                       double zeta_mev, int n = 20000) {
  const double x = scale_x * zeta_mev;
  const double eps = eps_of_zeta(zeta_mev);
  auto f = [&](double u) { return lifshitz_y_integrand(eps, x, x + u); };
  // split the offset range: log grid near 0, linear beyond
  return trapezoid_log(f, 1e-10, 1.0, n) + trapezoid(f, 1.0, 60.0, n);
}

// Natural cubic spline with analytic derivative.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n) throw std::invalid_argument("spline: need >= 3 points");
    std::vector<double> h(n - 1), alpha(n, 0.0), l(n), mu(n), z(n);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];
    for (std::size_t i = 1; i + 1 < n; ++i)
      alpha[i] = 3.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
    l[0] = 1.0;
    mu[0] = z[0] = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      l[i] = 2.0 * (x_[i + 1] - x_[i - 1]) - h[i - 1] * mu[i - 1];
      mu[i] = h[i] / l[i];
      z[i] = (alpha[i] - h[i - 1] * z[i - 1]) / l[i];
    }
    c_.assign(n, 0.0);
    b_.assign(n - 1, 0.0);
    d_.assign(n - 1, 0.0);
    for (std::size_t j = n - 1; j-- > 0;) {
      c_[j] = z[j] - mu[j] * c_[j + 1];
      b_[j] = (y_[j + 1] - y_[j]) / h[j] - h[j] * (c_[j + 1] + 2.0 * c_[j]) / 3.0;
      d_[j] = (c_[j + 1] - c_[j]) / (3.0 * h[j]);
    }
  }

  double derivative(double x) const {
    std::size_t j = 0;
    while (j + 2 < x_.size() && x > x_[j + 1]) ++j;
    const double dx = x - x_[j];
    return b_[j] + 2.0 * c_[j] * dx + 3.0 * d_[j] * dx * dx;
  }

 private:
  std::vector<double> x_, y_;
  std::vector<double> b_, c_, d_;
};

}  // namespace oracles
