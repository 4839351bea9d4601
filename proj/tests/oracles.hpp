#pragma once

// Reference computations used only by the tests. None of these call into the
// library's evaluation paths; they rebuild the quantities from closed forms or
// brute force so that a shared bug cannot hide.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// Maximizer of a unimodal f on [lo, hi] by golden-section search.
inline double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                 double tol = 1e-12) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol * (std::abs(a) + std::abs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Total mass of a density on (lower, b). The upper limit is approached from
// the left (densities vanish at b by convention). A finite lower endpoint is
// handled by x = lower + e^u, which smooths integrable endpoint singularities;
// an infinite one is cut at `lo_cut`.
inline double density_mass(const std::function<double(double)>& pdf, double lower, double b,
                           double lo_cut, int n = 20000) {
  const double top = std::nextafter(b, -INFINITY);
  const auto f = [&](double x) { return pdf(std::min(x, top)); };
  if (std::isfinite(lower)) {
    const auto g = [&](double u) { return f(lower + std::exp(u)) * std::exp(u); };
    return simpson(g, std::log(1e-300 + (lo_cut - lower)), std::log(b - lower), n);
  }
  return simpson(f, lo_cut, b, n);
}

// Tie fraction of the common-shock construction after the transform
// T = g(b) - g(X): each component becomes exponential with its own rate and
// the maxima become minima, so a tie is T_W < min(T_U, T_V).
inline double exponential_tie_fraction(double l1, double l2, double l12, std::size_t n,
                                       std::uint64_t seed) {
  if (l12 == 0.0) return 0.0;
  std::mt19937_64 eng(seed);
  std::exponential_distribution<double> eu(l1), ev(l2), ew(l12);
  std::size_t ties = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = eu(eng);
    const double v = ev(eng);
    const double w = ew(eng);
    if (w < std::min(u, v)) ++ties;
  }
  return static_cast<double>(ties) / static_cast<double>(n);
}

// Displayed closed forms of the four univariate families.
inline double type3_cdf(double x, double c, double b) { return x >= b ? 1.0 : std::exp(c * (x - b)); }
inline double power_cdf(double x, double c, double b) {
  return x <= 0 ? 0.0 : x >= b ? 1.0 : std::pow(x / b, c);
}
inline double shifted_power_cdf(double x, double c, double b) {
  return x <= -1 ? 0.0 : x >= b ? 1.0 : std::pow((x + 1.0) / (b + 1.0), c);
}
inline double reflected_weibull_cdf(double x, double c) { return x >= 0 ? 1.0 : std::exp(-c * x * x); }

// Common-shock joint CDF written directly as P(U<=x1) P(V<=x2) P(W<=min(x1,x2))
// for the type-3 case (g = identity).
inline double type3_joint_cdf(double x1, double x2, double l1, double l2, double l12, double b) {
  const auto F = [b](double x, double c) { return x >= b ? 1.0 : std::exp(c * (x - b)); };
  return F(x1, l1) * F(x2, l2) * F(std::min(x1, x2), l12);
}

// Mixed partial by a 4-point stencil with Richardson extrapolation over h, h/2.
inline double mixed_partial(const std::function<double(double, double)>& F, double x1, double x2,
                            double h) {
  const auto d = [&](double s) {
    return (F(x1 + s, x2 + s) - F(x1 + s, x2 - s) - F(x1 - s, x2 + s) + F(x1 - s, x2 - s)) /
           (4.0 * s * s);
  };
  return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

}  // namespace oracle
