#pragma once

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace casent::detail {

// Composite Gauss-Legendre over [lo, lo + span] with panel edges graded
// geometrically away from lo: offsets 0, d_min, d_min*ratio, ... The edge
// grid is a fixed function of (d_min, ratio, span), so the rule -- and hence
// its error -- varies smoothly with lo and with the integrand's parameters.
// That smoothness is what keeps numerical differentiation of downstream
// quantities (entropy, thermal corrections) clean.
//
// split > 1 bisects every panel that many times; comparing split levels is
// the refinement probe used for error estimates.
template <typename F>
double graded_panels(const F& f, double lo, double d_min, double span,
                     double ratio, int split) {
  using boost::math::quadrature::gauss;
  double acc = 0.0;
  double off_lo = 0.0, off_hi = d_min;
  while (off_lo < span) {
    const double a = lo + off_lo;
    const double b = lo + std::min(off_hi, span);
    if (split <= 1) {
      acc += gauss<double, 24>::integrate(f, a, b);
    } else {
      const double w = (b - a) / split;
      for (int i = 0; i < split; ++i)
        acc += gauss<double, 24>::integrate(f, a + i * w, a + (i + 1) * w);
    }
    off_lo = off_hi;
    off_hi *= ratio;
  }
  return acc;
}

// Uniform panels, for integrands without endpoint structure.
template <typename F>
double uniform_panels(const F& f, double a, double b, int n_panels, int split = 1) {
  using boost::math::quadrature::gauss;
  const int n = n_panels * std::max(1, split);
  const double w = (b - a) / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    acc += gauss<double, 32>::integrate(f, a + i * w, a + (i + 1) * w);
  return acc;
}

}  // namespace casent::detail
