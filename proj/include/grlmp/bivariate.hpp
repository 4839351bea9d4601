#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grlmp/assoc_op.hpp"
#include "grlmp/random.hpp"
#include "grlmp/univariate.hpp"

namespace grlmp {

/// Joint distribution function
///   F(x1, x2) = exp{l1 s1 + l2 s2 + l12 min(s1, s2)},  s_i = g(x_i) - g(b),
/// the diagonal-shift invariant family F(x1*t, x2*t) F(e,e) = F(x1,x2) F(t,t).
/// Equivalently X1 = max(U, W), X2 = max(V, W) with U, V, W independent
/// univariate members of rates l1, l2, l12 sharing (op, b): the common
/// component enters through P(W <= min(x1, x2)). Writing max(s1, s2) in the
/// last term instead gives a function with marginal rates l1, l2 that assigns
/// negative mass near the diagonal whenever l12 > 0.
class BivariateGrlmp {
 public:
  /// Throws DomainError unless lambda1, lambda2 > 0, lambda12 >= 0 and b is
  /// admissible for the op (same rules as GrlmpDistribution).
  BivariateGrlmp(AssocOp op, double lambda1, double lambda2, double lambda12, double b);

  const AssocOp& op() const { return op_; }
  double lambda1() const { return l1_; }
  double lambda2() const { return l2_; }
  double lambda12() const { return l12_; }
  double b() const { return b_; }
  double lower() const { return op_.domain().lower; }
  double total_rate() const { return l1_ + l2_ + l12_; }

  /// Arguments above b are clamped to b; 0 if either is at or below inf A.
  double joint_cdf(double x1, double x2) const;

  /// Density of the absolutely continuous part off the diagonal; for x1 < x2
  /// it is (l1 + l12) g'(x1) l2 g'(x2) F(x1, x2). Throws DomainError on the
  /// diagonal or outside the open support.
  double ac_density(double x1, double x2) const;

  /// Same density in s-coordinates (s_i = g(x_i) - g(b) < 0); no g' factors.
  double ac_density_s(double s1, double s2) const;

 private:
  AssocOp op_;
  double l1_;
  double l2_;
  double l12_;
  double b_;
  double g_b_;
};

/// Marginal of coordinate `which` (1 or 2): rate lambda_which + lambda12.
GrlmpDistribution marginal(const BivariateGrlmp& d, int which);

/// Law of max(X1, X2): rate lambda1 + lambda2 + lambda12.
GrlmpDistribution max_distribution(const BivariateGrlmp& d);

/// P(X1 = X2) = lambda12 / (lambda1 + lambda2 + lambda12).
double tie_probability(const BivariateGrlmp& d);

/// True iff lambda12 == 0, in which case the joint CDF is the product of the
/// marginals.
bool is_independent(const BivariateGrlmp& d);

/// n pairs (max(U, W), max(V, W)); for each pair U, V, W are drawn in that
/// order from rng. With lambda12 == 0, W is not drawn and the pair is (U, V).
/// Ties are bit-identical. Throws DomainError for n == 0.
std::vector<std::pair<double, double>> sample_pairs(const BivariateGrlmp& d, Rng& rng,
                                                    std::size_t n);

struct BivariateResidual {
  double max_abs = 0.0;
  std::array<double, 4> argmax_point{};  ///< (x1, x2, t1, t2)
  std::size_t evaluated = 0;
};

using JointCdf = std::function<double(double, double)>;

struct DiagonalTriple {
  double x1;
  double x2;
  double t;
};

struct IncrementQuad {
  double x1;
  double x2;
  double t1;
  double t2;
};

/// max |F(x1*t, x2*t) F(e,e) - F(x1,x2) F(t,t)| over the grid, with
/// `shifted_cdf` used for the left-hand F(x1*t, x2*t). Triples must satisfy
/// inf A < x_i < b, inf A < e, e <= t <= b, x_i * t <= b; violations throw
/// DomainError.
BivariateResidual gbrlmp_residual(const AssocOp& op, double b, const JointCdf& cdf,
                                  const JointCdf& shifted_cdf,
                                  std::span<const DiagonalTriple> grid,
                                  ResidualDomain domain = ResidualDomain::strict);
BivariateResidual gbrlmp_residual(const BivariateGrlmp& d, std::span<const DiagonalTriple> grid,
                                  ResidualDomain domain = ResidualDomain::strict);

/// Two-increment version |F(x1*t1, x2*t2) F(e,e) - F(x1,x2) F(t1,t2)|. Holds
/// identically only for the product form (lambda12 == 0).
BivariateResidual direct_extension_residual(const BivariateGrlmp& d,
                                            std::span<const IncrementQuad> grid,
                                            ResidualDomain domain = ResidualDomain::strict);

/// n^2 x-pairs times n t-values valid for gbrlmp_residual. Throws DomainError
/// if b < e. As in the univariate grid, e == b collapses the strict t-range to
/// {e}; the relaxed variant then draws t from quantiles.
std::vector<DiagonalTriple> standard_gbrlmp_grid(const BivariateGrlmp& d, std::size_t n,
                                                 ResidualDomain domain = ResidualDomain::strict);

/// Probe points with t1 != t2 valid for direct_extension_residual, chosen so
/// the minimum in the joint CDF switches between the two sides.
std::vector<IncrementQuad> standard_direct_extension_grid(
    const BivariateGrlmp& d, std::size_t n, ResidualDomain domain = ResidualDomain::strict);

/// Named members of the family built on each built-in operation.
struct CatalogEntry {
  std::string name;
  BuiltinOpId op;
  std::string identity;
  std::string generator;
  std::string support;
  std::string univariate_name;
  std::string univariate_cdf;
  std::string bivariate_cdf;
  std::string constraints;
  double default_b;

  BivariateGrlmp make(double lambda1, double lambda2, double lambda12, double b) const;
  BivariateGrlmp make(double lambda1, double lambda2, double lambda12) const {
    return make(lambda1, lambda2, lambda12, default_b);
  }
};

/// Rows 1-4: type-3 extreme value, power function on (0, b), power function
/// on (-1, b), reflected Weibull.
std::vector<CatalogEntry> table1_catalog();

/// The family restricted to [e, b)^2: X_i' = max(X_i, e). Requires
/// inf A < e < b so that F(e, e) > 0.
class TruncatedBivariateGrlmp {
 public:
  explicit TruncatedBivariateGrlmp(BivariateGrlmp base);
  const BivariateGrlmp& base() const { return base_; }
  double identity() const { return base_.op().identity(); }
  double joint_cdf(double x1, double x2) const;

 private:
  BivariateGrlmp base_;
};

struct QuadratureConfig {
  std::size_t nodes = 64;      ///< Gauss-Legendre nodes per axis per triangle
  double tolerance = 1e-10;    ///< allowed |I(n) - I(n/2)| for the ac mass
};

struct PointMass {
  double x1;
  double x2;
  double mass;
};

/// Split of the truncated law into point, line and area components.
struct DecompositionReport {
  std::vector<PointMass> atoms;        ///< the atom at (e, e)
  /// Mass on the boundary segments {x1 = e, e < x2 < b} and
  /// {x2 = e, e < x1 < b}.
  std::array<double, 2> edge_masses{};
  double singular_mass = 0.0;          ///< open diagonal e < x1 = x2 < b
  double ac_mass = 0.0;                ///< off-diagonal interior
  double ac_error_estimate = 0.0;
  double total = 0.0;
};

/// Atom and edge masses in closed form, diagonal mass
/// l12/k (1 - exp(-k g(b))), and ac mass by tensor Gauss-Legendre on the two
/// off-diagonal triangles in s-coordinates, split into panels that widen
/// geometrically away from the corner s = 0. Throws QuadratureError if the
/// ac-mass error estimate exceeds cfg.tolerance, DomainError if
/// cfg.nodes < 2.
DecompositionReport decompose(const TruncatedBivariateGrlmp& d, const QuadratureConfig& cfg = {});

}  // namespace grlmp
