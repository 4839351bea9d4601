#pragma once

#include <cstddef>
#include <vector>

namespace grlmp {

struct GaussLegendreRule {
  std::vector<double> nodes;    ///< ascending, on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n. Throws
/// DomainError for n == 0.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Integral over the triangle {lo < u < v < hi} of f(u, v) using the rule on
/// both axes (outer over v, inner over u). Summation order is fixed.
template <typename F>
double integrate_triangle(const GaussLegendreRule& rule, double lo, double hi, F&& f) {
  const double outer_half = 0.5 * (hi - lo);
  const double outer_mid = 0.5 * (hi + lo);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = outer_mid + outer_half * rule.nodes[i];
    const double inner_half = 0.5 * (v - lo);
    const double inner_mid = 0.5 * (v + lo);
    double inner = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      inner += rule.weights[j] * f(inner_mid + inner_half * rule.nodes[j], v);
    }
    total += rule.weights[i] * inner_half * inner;
  }
  return outer_half * total;
}

/// Integral over {lo < u < v < hi} split along both axes at `edges` (strictly
/// increasing, edges.front() == lo, edges.back() == hi): off-diagonal panel
/// squares use the tensor rule, diagonal panels use integrate_triangle.
template <typename F>
double integrate_triangle_panels(const GaussLegendreRule& rule, const std::vector<double>& edges,
                                 F&& f) {
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    const double v_half = 0.5 * (edges[j + 1] - edges[j]);
    const double v_mid = 0.5 * (edges[j + 1] + edges[j]);
    for (std::size_t i = 0; i < j; ++i) {
      const double u_half = 0.5 * (edges[i + 1] - edges[i]);
      const double u_mid = 0.5 * (edges[i + 1] + edges[i]);
      double square = 0.0;
      for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
        const double v = v_mid + v_half * rule.nodes[a];
        double inner = 0.0;
        for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
          inner += rule.weights[b] * f(u_mid + u_half * rule.nodes[b], v);
        }
        square += rule.weights[a] * inner;
      }
      total += u_half * v_half * square;
    }
    total += integrate_triangle(rule, edges[j], edges[j + 1], f);
  }
  return total;
}

}  // namespace grlmp
