#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "grlmp/assoc_op.hpp"
#include "grlmp/random.hpp"

namespace grlmp {

/// F(x) = exp[c (g(x) - g(b))] on (inf A, b), F = 1 for x >= b.
///
/// The distribution function characterized by F(x) F(t) = F(x * t) F(e).
/// With the built-in operations it is the type-3 extreme value law
/// (addition), the power function law on (0, b) (multiplication) or on
/// (-1, b) (shifted multiplication), and the reflected Weibull law
/// (neg_quadratic, b = 0).
class GrlmpDistribution {
 public:
  /// Throws DomainError unless c > 0, b lies in the op's domain with g(b)
  /// finite, and the op is certified.
  GrlmpDistribution(AssocOp op, double c, double b);

  const AssocOp& op() const { return op_; }
  double c() const { return c_; }
  double b() const { return b_; }
  double lower() const { return op_.domain().lower; }

  double cdf(double x) const;
  double pdf(double x) const;
  /// g^-1(g(b) + ln(p)/c); quantile(1) = b. Throws DomainError("p out of
  /// range") unless 0 < p <= 1.
  double quantile(double p) const;
  /// f(x)/F(x) = c g'(x). Throws DomainError outside the open support.
  double reversed_hazard(double x) const;

  /// n inverse-transform draws. Throws DomainError for n == 0.
  std::vector<double> sample(Rng& rng, std::size_t n) const;

 private:
  AssocOp op_;
  double c_;
  double b_;
  double g_b_;
};

/// The proportional reversed hazards action F -> F^alpha (rate c -> alpha c).
GrlmpDistribution exponentiate(const GrlmpDistribution& d, double alpha);

/// Variant supported on [e, b] with an atom at the identity e of
/// mass exp(-c g(b)). Requires inf A < e < b.
class TruncatedGrlmp {
 public:
  explicit TruncatedGrlmp(GrlmpDistribution base);

  const GrlmpDistribution& base() const { return base_; }
  double atom_location() const { return base_.op().identity(); }
  double atom_mass() const { return atom_mass_; }

  double cdf(double x) const;
  /// U <= atom mass maps to e exactly, otherwise base quantile(U).
  std::vector<double> sample(Rng& rng, std::size_t n) const;

 private:
  GrlmpDistribution base_;
  double atom_mass_;
};

struct GrlmpResidual {
  double max_abs = 0.0;
  std::pair<double, double> argmax_point{0.0, 0.0};
  std::size_t evaluated = 0;
};

/// Which (x, t) pairs the residual accepts.
///   strict:  inf A < x < b, inf A < e, e <= t <= b, x * t <= b
///   relaxed: t may also lie below e (inf A < t <= b). Useful when the strict
///            t-range collapses, e.g. neg_quadratic where e = b = 0.
enum class ResidualDomain { strict, relaxed };

using UnivariateCdf = std::function<double(double)>;

/// max |F(x) F(t) - F(x * t) F(e)| over the grid. Pairs outside the accepted
/// domain throw DomainError naming the pair.
GrlmpResidual grlmp_residual(const AssocOp& op, double b, const UnivariateCdf& cdf,
                             const UnivariateCdf& cdf_at_combined,
                             std::span<const std::pair<double, double>> grid,
                             ResidualDomain domain = ResidualDomain::strict);

GrlmpResidual grlmp_residual(const GrlmpDistribution& d,
                             std::span<const std::pair<double, double>> grid,
                             ResidualDomain domain = ResidualDomain::strict);

/// nx x nt pairs satisfying the strict domain: t spaced uniformly on [e, b]
/// (a single t when e == b) and x = g^-1(g(q_i) - g(t)) with q_i quantiles of
/// d at probabilities spread over (0, 1), so that x * t = q_i < b.
/// Throws DomainError if b < e. With ResidualDomain::relaxed and b <= e the
/// t values are quantiles of d instead. For b < e the equation itself fails
/// on those pairs: F(e) = 1 while F(x) F(t) = F(x * t) exp(-c g(b)).
std::vector<std::pair<double, double>> standard_grlmp_grid(
    const GrlmpDistribution& d, std::size_t nx, std::size_t nt,
    ResidualDomain domain = ResidualDomain::strict);

}  // namespace grlmp
