#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grlmp/assoc_op.hpp"
#include "grlmp/univariate.hpp"

namespace grlmp {

struct UnivariateFit {
  double c_hat = 0.0;
  double b_hat = 0.0;
  bool b_estimated = false;
  double log_likelihood = 0.0;
  std::size_t n = 0;
};

/// Closed-form maximum likelihood rate c_hat = n / sum(g(b) - g(x_i)).
/// Without b the sample maximum is used (boundary MLE; it biases c_hat
/// upward and is not corrected).
/// Throws DegenerateError for fewer than 2 points or a zero sum, DomainError
/// for points outside the op domain or at/above a given b.
UnivariateFit fit_univariate(std::span<const double> data, const AssocOp& op,
                             std::optional<double> b = std::nullopt);

/// log L(c) = n log c + sum log g'(x_i) + c sum(g(x_i) - g(b)).
double univariate_log_likelihood(std::span<const double> data, const AssocOp& op, double c,
                                 double b);

struct BivariateFit {
  double lambda1_hat = 0.0;
  double lambda2_hat = 0.0;
  double lambda12_hat = 0.0;
  double k_hat = 0.0;          ///< lambda1_hat + lambda2_hat + lambda12_hat
  double k_max_hat = 0.0;      ///< rate fitted to the per-pair maxima
  double b_hat = 0.0;
  double m1_hat = 0.0;         ///< marginal rate, lambda1 + lambda12
  double m2_hat = 0.0;
  double consistency_defect = 0.0;  ///< |m1 + m2 - lambda12 - k_max|
  std::size_t tie_count = 0;
  std::size_t n = 0;
  std::vector<std::string> warnings;
};

/// Moment/tie-fraction estimator: k_max from the maxima, lambda12 =
/// k_max * (ties / n), marginal rates from each coordinate, lambda_i =
/// max(0, m_i - lambda12) with a warning when clamped. A pair is a tie when
/// |x1 - x2| <= tie_tolerance * max(|x1|, |x2|). Without b, the largest
/// coordinate is used for every component fit. Throws DegenerateError for
/// n < 10.
BivariateFit fit_bivariate(std::span<const std::pair<double, double>> pairs, const AssocOp& op,
                           std::optional<double> b, double tie_tolerance = 0.0);

struct KsReport {
  double statistic = 0.0;
  std::size_t n = 0;
  double critical_value_01 = 0.0;
  bool pass = false;
};

/// One-sample Kolmogorov-Smirnov test against `cdf` with the asymptotic
/// alpha = 0.01 critical value 1.6276 / sqrt(n). Throws DomainError for
/// empty or non-finite data.
KsReport ks_test(std::span<const double> data, const std::function<double(double)>& cdf);

inline constexpr double kKsAlpha01 = 1.6276;

/// [F(x1+h, x2+h) - F(x1+h, x2-h) - F(x1-h, x2+h) + F(x1-h, x2-h)] / 4h^2.
/// Throws DomainError unless |x1 - x2| > 4h and the stencil lies in the
/// open support.
double numeric_mixed_partial(const std::function<double(double, double)>& F, double x1,
                             double x2, double h, const SupportInterval& support);

}  // namespace grlmp
