#include "grlmp/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "grlmp/errors.hpp"

namespace grlmp {

namespace {

void check_points(std::span<const double> data, const AssocOp& op, double b) {
  for (double x : data) {
    if (!op.domain().contains(x) || !(x > op.domain().lower)) {
      throw DomainError("data point outside the operation domain");
    }
    if (x > b) throw DomainError("data point above the upper endpoint b");
  }
}

// c_hat with b fixed; points equal to b are allowed (they add zero).
UnivariateFit closed_form_fit(std::span<const double> data, const AssocOp& op, double b,
                              bool estimated) {
  check_points(data, op, b);
  UnivariateFit fit;
  fit.n = data.size();
  fit.b_hat = b;
  fit.b_estimated = estimated;
  const double g_b = op.g(b);
  if (!std::isfinite(g_b)) throw DomainError("g(b) must be finite");
  double sum = 0.0;
  for (double x : data) sum += g_b - op.g(x);
  if (!(sum > 0.0)) throw DegenerateError("all observations coincide with b");
  fit.c_hat = static_cast<double>(fit.n) / sum;
  fit.log_likelihood = univariate_log_likelihood(data, op, fit.c_hat, b);
  return fit;
}

}  // namespace

double univariate_log_likelihood(std::span<const double> data, const AssocOp& op, double c,
                                 double b) {
  const double g_b = op.g(b);
  double ll = static_cast<double>(data.size()) * std::log(c);
  for (double x : data) ll += std::log(op.g_prime(x)) + c * (op.g(x) - g_b);
  return ll;
}

UnivariateFit fit_univariate(std::span<const double> data, const AssocOp& op,
                             std::optional<double> b) {
  if (data.size() < 2) throw DegenerateError("fit needs at least 2 observations");
  if (b) {
    for (double x : data) {
      if (!(x < *b)) throw DomainError("data must lie strictly below b");
    }
    return closed_form_fit(data, op, *b, false);
  }
  return closed_form_fit(data, op, *std::max_element(data.begin(), data.end()), true);
}

BivariateFit fit_bivariate(std::span<const std::pair<double, double>> pairs, const AssocOp& op,
                           std::optional<double> b, double tie_tolerance) {
  if (pairs.size() < 10) throw DegenerateError("bivariate fit needs at least 10 pairs");
  if (!(tie_tolerance >= 0.0)) throw DomainError("tie tolerance must be nonnegative");

  std::vector<double> first;
  std::vector<double> second;
  std::vector<double> maxima;
  first.reserve(pairs.size());
  second.reserve(pairs.size());
  maxima.reserve(pairs.size());
  BivariateFit fit;
  fit.n = pairs.size();
  for (const auto& [x1, x2] : pairs) {
    first.push_back(x1);
    second.push_back(x2);
    maxima.push_back(std::max(x1, x2));
    if (std::abs(x1 - x2) <= tie_tolerance * std::max(std::abs(x1), std::abs(x2))) {
      ++fit.tie_count;
    }
  }

  if (b) {
    for (double x : maxima) {
      if (!(x < *b)) throw DomainError("data must lie strictly below b");
    }
  }
  fit.b_hat = b ? *b : *std::max_element(maxima.begin(), maxima.end());
  fit.k_max_hat = closed_form_fit(maxima, op, fit.b_hat, !b).c_hat;
  fit.m1_hat = closed_form_fit(first, op, fit.b_hat, !b).c_hat;
  fit.m2_hat = closed_form_fit(second, op, fit.b_hat, !b).c_hat;
  fit.lambda12_hat =
      fit.k_max_hat * static_cast<double>(fit.tie_count) / static_cast<double>(fit.n);
  fit.consistency_defect = std::abs(fit.m1_hat + fit.m2_hat - fit.lambda12_hat - fit.k_max_hat);

  const auto component = [&](double m, const char* label) {
    const double raw = m - fit.lambda12_hat;
    if (raw < 0.0) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s clamped at 0 (marginal rate %.6g below lambda12_hat %.6g)",
                    label, m, fit.lambda12_hat);
      fit.warnings.emplace_back(buf);
      return 0.0;
    }
    return raw;
  };
  fit.lambda1_hat = component(fit.m1_hat, "lambda1_hat");
  fit.lambda2_hat = component(fit.m2_hat, "lambda2_hat");
  fit.k_hat = fit.lambda1_hat + fit.lambda2_hat + fit.lambda12_hat;
  return fit;
}

KsReport ks_test(std::span<const double> data, const std::function<double(double)>& cdf) {
  if (data.empty()) throw DomainError("KS test needs at least one observation");
  std::vector<double> sorted(data.begin(), data.end());
  for (double x : sorted) {
    if (!std::isfinite(x)) throw DomainError("KS test data must be finite");
  }
  std::sort(sorted.begin(), sorted.end());

  KsReport report;
  report.n = sorted.size();
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double above = (static_cast<double>(i) + 1.0) / n - f;
    const double below = f - static_cast<double>(i) / n;
    report.statistic = std::max({report.statistic, std::abs(above), std::abs(below)});
  }
  report.critical_value_01 = kKsAlpha01 / std::sqrt(n);
  report.pass = report.statistic < report.critical_value_01;
  return report;
}

double numeric_mixed_partial(const std::function<double(double, double)>& F, double x1,
                             double x2, double h, const SupportInterval& support) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  if (!(std::abs(x1 - x2) > 4.0 * h)) {
    throw DomainError("mixed-partial stencil straddles the diagonal");
  }
  for (double v : {x1 - h, x1 + h, x2 - h, x2 + h}) {
    if (!support.interior(v)) throw DomainError("mixed-partial stencil leaves the support");
  }
  return (F(x1 + h, x2 + h) - F(x1 + h, x2 - h) - F(x1 - h, x2 + h) + F(x1 - h, x2 - h)) /
         (4.0 * h * h);
}

}  // namespace grlmp
