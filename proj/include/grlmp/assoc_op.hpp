#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grlmp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Interval of the extended real line with per-endpoint closedness.
/// An infinite endpoint is always open.
struct SupportInterval {
  double lower = -kInf;
  double upper = kInf;
  bool lower_closed = false;
  bool upper_closed = false;

  bool contains(double x) const;
  bool interior(double x) const { return x > lower && x < upper; }
  bool lower_finite() const { return lower > -kInf; }
  bool upper_finite() const { return upper < kInf; }
};

enum class BuiltinOpId { addition, multiplication, shifted_multiplication, neg_quadratic };

std::string_view to_string(BuiltinOpId id);
std::optional<BuiltinOpId> parse_builtin_op(std::string_view name);

using RealFn = std::function<double(double)>;

/// Reducible continuous associative operation x * y = g^-1(g(x) + g(y)).
///
/// The generator g is strictly increasing on the domain and vanishes at the
/// identity element. Values are immutable once built.
class AssocOp {
 public:
  /// Builds a user-defined operation. Throws DomainError if the domain is
  /// empty or g(identity) != 0. Callers must run certify_axioms (or
  /// require_certified) before using the op in a distribution.
  static AssocOp custom(std::string name, RealFn g, RealFn g_inv,
                        std::optional<RealFn> g_prime, double identity,
                        SupportInterval domain);

  const std::string& name() const { return name_; }
  std::optional<BuiltinOpId> builtin_id() const { return builtin_; }
  double identity() const { return identity_; }
  const SupportInterval& domain() const { return domain_; }
  bool has_analytic_derivative() const { return g_prime_.has_value(); }

  double g(double x) const { return g_(x); }
  double g_inv(double y) const { return g_inv_(y); }
  /// g'(x): analytic when supplied, otherwise g_prime_fallback.
  double g_prime(double x) const;

  /// g evaluated at the domain endpoints (limits for infinite endpoints).
  double g_lower() const { return g_lower_; }
  double g_upper() const { return g_upper_; }

  /// Same operation generated by alpha * g (alpha > 0); combine values are
  /// unchanged up to rounding.
  AssocOp scaled(double alpha) const;

  /// Built-in ops are certified by construction; custom ops after a
  /// successful require_certified.
  bool certified() const { return certified_; }

 private:
  friend AssocOp builtin(BuiltinOpId id);
  AssocOp() = default;
  void refresh_limits();

  std::string name_;
  std::optional<BuiltinOpId> builtin_;
  RealFn g_;
  RealFn g_inv_;
  std::optional<RealFn> g_prime_;
  double identity_ = 0.0;
  SupportInterval domain_;
  double g_lower_ = -kInf;
  double g_upper_ = kInf;
  bool certified_ = false;

  friend AssocOp require_certified(const AssocOp& op);
};

/// Catalog entry for a built-in operation on its maximal domain:
///   addition               g(x) = x           e = 0   (-inf, inf)
///   multiplication         g(x) = log x       e = 1   (0, inf)
///   shifted_multiplication g(x) = log(x + 1)  e = 0   (-1, inf)
///   neg_quadratic          g(x) = -x^2        e = 0   (-inf, 0]
/// neg_quadratic combines to the negative root -sqrt(x^2 + y^2) so that the
/// result stays in (-inf, 0].
AssocOp builtin(BuiltinOpId id);

/// x * y. Throws DomainError if an argument is outside the domain and
/// RangeError if g(x) + g(y) falls outside the image of the domain or the
/// result overflows.
/// combine(x, e) and combine(e, x) return x exactly.
double combine(const AssocOp& op, double x, double y);

/// Finite-difference derivative of g: central with h = max(1e-6, 1e-6|x|),
/// one-sided when one side of the stencil leaves the domain.
double g_prime_fallback(const AssocOp& op, double x);

struct AxiomReport {
  double associativity = 0.0;   ///< max relative |(x*y)*z - x*(y*z)|
  double identity = 0.0;        ///< max |g^-1(g(x) + g(e)) - x| / max(1, |x|)
  double commutativity = 0.0;   ///< max relative |x*y - y*x|
  double scale_invariance = 0.0;///< max relative gap between ops from g and 2g
  bool monotone = true;         ///< g strictly increasing along the grid
  bool injective = true;        ///< y -> x*y strictly increasing along the grid
  bool generator_zero_at_identity = true;
  std::size_t grid_points = 0;
  std::size_t triples_evaluated = 0;
  std::size_t triples_skipped = 0;

  /// All residuals within `tolerance` and all boolean checks hold.
  bool passed(double tolerance = 1e-9) const;
};

/// Interior grid used for certification: uniform on finite domains,
/// geometric towards infinite endpoints, small integers on (-inf, inf).
std::vector<double> certification_grid(const SupportInterval& domain,
                                       std::size_t grid_size);

/// Checks the axioms on grid_size^3 triples. Triples whose combines leave the
/// domain are skipped and counted. Throws DomainError for grid_size < 3 or a
/// degenerate domain.
AxiomReport certify_axioms(const AssocOp& op, std::size_t grid_size);

/// Runs certify_axioms(op, 12) and returns a copy marked certified.
/// Throws DomainError naming the failing axiom otherwise.
AssocOp require_certified(const AssocOp& op);

}  // namespace grlmp
