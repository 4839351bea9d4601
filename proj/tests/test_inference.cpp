#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "grlmp/bivariate.hpp"
#include "grlmp/errors.hpp"
#include "grlmp/inference.hpp"
#include "oracles.hpp"

using namespace grlmp;

TEST(FitUnivariate, TwoPoints) {
  const std::vector<double> data{-1, -2};
  const auto fit = fit_univariate(data, builtin(BuiltinOpId::addition), 0.0);
  EXPECT_NEAR(fit.c_hat, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(fit.n, 2u);
  EXPECT_FALSE(fit.b_estimated);
  const auto ll = [&](double c) {
    return univariate_log_likelihood(data, builtin(BuiltinOpId::addition), c, 0.0);
  };
  EXPECT_NEAR(fit.log_likelihood, ll(fit.c_hat), 1e-15);
  // 2 log c - 3c at c = 2/3
  EXPECT_NEAR(fit.log_likelihood, 2 * std::log(2.0 / 3.0) - 2.0, 1e-14);
}

TEST(FitUnivariate, ClosedFormMatchesGoldenSection) {
  const struct {
    BuiltinOpId op;
    double c, b;
  } cases[] = {{BuiltinOpId::addition, 2, 0},
               {BuiltinOpId::multiplication, 1.5, 2},
               {BuiltinOpId::shifted_multiplication, 0.7, 1},
               {BuiltinOpId::neg_quadratic, 3, 0}};
  for (const auto& c : cases) {
    const auto op = builtin(c.op);
    const GrlmpDistribution d(op, c.c, c.b);
    Rng rng(17);
    const auto xs = d.sample(rng, 500);
    const auto fit = fit_univariate(xs, op, c.b);
    const double numeric = oracle::golden_section_max(
        [&](double r) { return univariate_log_likelihood(xs, op, r, c.b); }, 1e-3, 50.0);
    EXPECT_NEAR(fit.c_hat, numeric, 1e-6 * numeric) << to_string(c.op);
  }
}

TEST(FitUnivariate, Recovery) {
  const GrlmpDistribution d(builtin(BuiltinOpId::addition), 2.0, 0.0);
  Rng rng(3);
  const auto xs = d.sample(rng, 10000);
  EXPECT_NEAR(fit_univariate(xs, d.op(), 0.0).c_hat, 2.0, 0.06);
}

TEST(FitUnivariate, EstimatedEndpoint) {
  const GrlmpDistribution d(builtin(BuiltinOpId::multiplication), 2.0, 3.0);
  Rng rng(4);
  const auto xs = d.sample(rng, 10000);
  const auto fit = fit_univariate(xs, d.op());
  EXPECT_TRUE(fit.b_estimated);
  EXPECT_EQ(fit.b_hat, *std::max_element(xs.begin(), xs.end()));
  EXPECT_LE(fit.b_hat, 3.0);
  EXPECT_NEAR(fit.c_hat, 2.0, 0.1);
}

TEST(FitUnivariate, Errors) {
  const auto add = builtin(BuiltinOpId::addition);
  const std::vector<double> one{-1};
  EXPECT_THROW(fit_univariate(one, add, 0.0), DegenerateError);
  const std::vector<double> same{-1, -1, -1};
  EXPECT_THROW(fit_univariate(same, add), DegenerateError);
  const std::vector<double> at_b{-1, 0};
  EXPECT_THROW(fit_univariate(at_b, add, 0.0), DomainError);
  const std::vector<double> outside{0.5, -1};
  EXPECT_THROW(fit_univariate(outside, builtin(BuiltinOpId::neg_quadratic), 0.0), DomainError);
}

TEST(FitUnivariate, GeneratorScaleInvariance) {
  const auto op = builtin(BuiltinOpId::multiplication);
  const GrlmpDistribution d(op, 1.3, 2.0);
  Rng rng(5);
  const auto xs = d.sample(rng, 1000);
  const double c = fit_univariate(xs, op, 2.0).c_hat;
  EXPECT_NEAR(fit_univariate(xs, op.scaled(2.5), 2.0).c_hat, c / 2.5, 1e-12 * c);
}

TEST(FitBivariate, Recovery) {
  const BivariateGrlmp d(builtin(BuiltinOpId::addition), 1, 1, 1, 0);
  Rng rng(6);
  const auto pairs = sample_pairs(d, rng, 100000);
  const auto fit = fit_bivariate(pairs, d.op(), 0.0);
  EXPECT_NEAR(fit.lambda1_hat, 1.0, 0.05);
  EXPECT_NEAR(fit.lambda2_hat, 1.0, 0.05);
  EXPECT_NEAR(fit.lambda12_hat, 1.0, 0.05);
  EXPECT_NEAR(fit.k_max_hat, 3.0, 0.15);
  EXPECT_NEAR(fit.lambda1_hat + fit.lambda2_hat + fit.lambda12_hat, fit.k_hat, 1e-9);
  EXPECT_LT(fit.consistency_defect, 0.1);
  EXPECT_TRUE(fit.warnings.empty());
}

TEST(FitBivariate, IndependentDataHasNoTies) {
  const BivariateGrlmp d(builtin(BuiltinOpId::multiplication), 1, 2, 0, 2);
  Rng rng(7);
  const auto pairs = sample_pairs(d, rng, 20000);
  const auto fit = fit_bivariate(pairs, d.op(), 2.0);
  EXPECT_EQ(fit.tie_count, 0u);
  EXPECT_EQ(fit.lambda12_hat, 0.0);
}

TEST(FitBivariate, SwapSymmetry) {
  const BivariateGrlmp d(builtin(BuiltinOpId::addition), 3, 1, 4, 0);
  Rng rng(8);
  auto pairs = sample_pairs(d, rng, 5000);
  const auto fit = fit_bivariate(pairs, d.op(), 0.0);
  for (auto& p : pairs) std::swap(p.first, p.second);
  const auto swapped = fit_bivariate(pairs, d.op(), 0.0);
  EXPECT_EQ(fit.lambda1_hat, swapped.lambda2_hat);
  EXPECT_EQ(fit.lambda2_hat, swapped.lambda1_hat);
  EXPECT_EQ(fit.lambda12_hat, swapped.lambda12_hat);
}

TEST(FitBivariate, ClampsWithWarning) {
  // every pair tied, but the two margins have different spread
  std::vector<std::pair<double, double>> pairs;
  for (int i = 1; i <= 20; ++i) pairs.emplace_back(-0.1 * i, -0.1 * i);
  pairs.emplace_back(-0.05, -9.0);
  const auto fit = fit_bivariate(pairs, builtin(BuiltinOpId::addition), 0.0);
  EXPECT_EQ(fit.lambda2_hat, 0.0);
  EXPECT_FALSE(fit.warnings.empty());
  EXPECT_GE(fit.lambda1_hat, 0.0);
}

TEST(FitBivariate, TieTolerance) {
  std::vector<std::pair<double, double>> pairs;
  for (int i = 1; i <= 12; ++i) pairs.emplace_back(-1.0 * i, -1.0 * i * (1 + 1e-12));
  EXPECT_EQ(fit_bivariate(pairs, builtin(BuiltinOpId::addition), 0.0, 0.0).tie_count, 0u);
  EXPECT_EQ(fit_bivariate(pairs, builtin(BuiltinOpId::addition), 0.0, 1e-9).tie_count, 12u);
}

TEST(FitBivariate, TooFewPairs) {
  std::vector<std::pair<double, double>> pairs(9, {-1.0, -2.0});
  EXPECT_THROW(fit_bivariate(pairs, builtin(BuiltinOpId::addition), 0.0), DegenerateError);
}

TEST(Ks, Singleton) {
  const GrlmpDistribution d(builtin(BuiltinOpId::addition), 1.0, 0.0);
  const std::vector<double> one{d.quantile(0.5)};
  const auto r = ks_test(one, [&](double x) { return d.cdf(x); });
  EXPECT_NEAR(r.statistic, 0.5, 1e-15);
  EXPECT_NEAR(r.critical_value_01, 1.6276, 1e-15);
  EXPECT_EQ(r.pass, r.statistic < r.critical_value_01);
}

TEST(Ks, ProbabilityIntegralTransformInvariance) {
  const GrlmpDistribution d(builtin(BuiltinOpId::neg_quadratic), 2.0, 0.0);
  Rng rng(9);
  const auto xs = d.sample(rng, 2000);
  std::vector<double> us;
  for (double x : xs) us.push_back(d.cdf(x));
  const auto a = ks_test(xs, [&](double x) { return d.cdf(x); });
  const auto b = ks_test(us, [](double u) { return u; });
  EXPECT_EQ(a.statistic, b.statistic);
}

TEST(Ks, Errors) {
  const std::vector<double> empty;
  EXPECT_THROW(ks_test(empty, [](double) { return 0.0; }), DomainError);
  const std::vector<double> bad{std::nan("")};
  EXPECT_THROW(ks_test(bad, [](double) { return 0.0; }), DomainError);
}

TEST(MixedPartial, ProductCdf) {
  const auto F = [](double x1, double x2) { return std::exp(std::min(x1, 0.0) + std::min(x2, 0.0)); };
  const SupportInterval all{};
  EXPECT_NEAR(numeric_mixed_partial(F, -2, -1, 1e-4, all), std::exp(-3.0), 1e-5);
  EXPECT_THROW(numeric_mixed_partial(F, -1, -1.0001, 1e-4, all), DomainError);
  const SupportInterval pos{0.0, kInf};
  EXPECT_THROW(numeric_mixed_partial(F, 0.00001, 1, 1e-4, pos), DomainError);
  EXPECT_THROW(numeric_mixed_partial(F, -2, -1, 0.0, all), DomainError);
}
