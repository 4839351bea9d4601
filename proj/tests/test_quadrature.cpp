#include <cmath>

#include <gtest/gtest.h>

#include "grlmp/errors.hpp"
#include "grlmp/quadrature.hpp"

using namespace grlmp;

TEST(GaussLegendre, WeightsAndSymmetry) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    const auto rule = gauss_legendre(n);
    ASSERT_EQ(rule.nodes.size(), n);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += rule.weights[i];
      EXPECT_NEAR(rule.nodes[i], -rule.nodes[n - 1 - i], 1e-14);
      if (i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    }
    EXPECT_NEAR(sum, 2.0, 1e-13);
  }
  EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(GaussLegendre, ExactForPolynomials) {
  // n points integrate degree 2n - 1 exactly
  const auto rule = gauss_legendre(4);
  for (int p = 0; p <= 7; ++p) {
    double s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
    EXPECT_NEAR(s, p % 2 ? 0.0 : 2.0 / (p + 1), 1e-14) << p;
  }
  const auto two = gauss_legendre(2);
  EXPECT_NEAR(two.nodes[1], 1 / std::sqrt(3.0), 1e-15);
}

TEST(Triangle, AreaAndMoments) {
  const auto rule = gauss_legendre(8);
  EXPECT_NEAR(integrate_triangle(rule, 0, 2, [](double, double) { return 1.0; }), 2.0, 1e-14);
  // integral of u v over 0 < u < v < 1 is 1/8
  EXPECT_NEAR(integrate_triangle(rule, 0, 1, [](double u, double v) { return u * v; }), 0.125,
              1e-14);
  const auto big = gauss_legendre(32);
  // exp(u + 2v) over -1 < u < v < 0
  const double ref = (1 - std::exp(-3.0)) / 3 - std::exp(-1.0) * (1 - std::exp(-2.0)) / 2;
  EXPECT_NEAR(integrate_triangle(big, -1, 0, [](double u, double v) { return std::exp(u + 2 * v); }),
              ref, 1e-13);
}
