#include "grlmp/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grlmp/errors.hpp"
#include "grlmp/quadrature.hpp"

namespace grlmp {

namespace {

AssocOp ensure_certified(AssocOp op) {
  if (op.certified()) return op;
  return require_certified(op);
}

std::string quad_text(double x1, double x2, double t1, double t2) {
  return "(" + std::to_string(x1) + ", " + std::to_string(x2) + ", " + std::to_string(t1) +
         ", " + std::to_string(t2) + ")";
}

// Shared domain check for both residual forms. Returns (x1*t1, x2*t2).
std::pair<double, double> checked_shift(const AssocOp& op, double b, const IncrementQuad& q,
                                        ResidualDomain domain) {
  const double lower = op.domain().lower;
  const double e = op.identity();
  const auto t_ok = [&](double t) {
    return domain == ResidualDomain::strict ? (e <= t && t <= b) : (t > lower && t <= b);
  };
  const bool ok = q.x1 > lower && q.x1 < b && q.x2 > lower && q.x2 < b && t_ok(q.t1) &&
                  t_ok(q.t2);
  if (!ok) {
    throw DomainError("residual grid point " + quad_text(q.x1, q.x2, q.t1, q.t2) +
                      " violates the domain");
  }
  try {
    const double y1 = combine(op, q.x1, q.t1);
    const double y2 = combine(op, q.x2, q.t2);
    if (y1 > b || y2 > b) {
      throw DomainError("residual grid point " + quad_text(q.x1, q.x2, q.t1, q.t2) +
                        " has x_i * t_i > b");
    }
    return {y1, y2};
  } catch (const RangeError&) {
    throw DomainError("residual grid point " + quad_text(q.x1, q.x2, q.t1, q.t2) +
                      " combines out of range");
  }
}

BivariateResidual increment_residual(const AssocOp& op, double b, const JointCdf& cdf,
                                     const JointCdf& shifted_cdf,
                                     std::span<const IncrementQuad> grid,
                                     ResidualDomain domain) {
  if (!(op.domain().lower < op.identity())) throw DomainError("residual needs inf A < e");
  const double e = op.identity();
  const double f_ee = cdf(e, e);
  BivariateResidual out;
  for (const auto& q : grid) {
    const auto [y1, y2] = checked_shift(op, b, q, domain);
    const double gap = std::abs(shifted_cdf(y1, y2) * f_ee - cdf(q.x1, q.x2) * cdf(q.t1, q.t2));
    if (out.evaluated == 0 || gap > out.max_abs) {
      out.max_abs = gap;
      out.argmax_point = {q.x1, q.x2, q.t1, q.t2};
    }
    ++out.evaluated;
  }
  return out;
}

// Increments in [e, b] (strict) plus quantile levels of `levels`; x values are
// placed so that x * t lands on a quantile. When e == b the strict t-range is
// a single point; the relaxed variant then uses quantiles for t as well.
struct GridAxes {
  std::vector<double> qs;
  std::vector<double> ts;
  bool collapsed = false;
};

GridAxes grid_axes(const GrlmpDistribution& levels, std::size_t n, ResidualDomain domain) {
  const AssocOp& op = levels.op();
  const double e = op.identity();
  const double b = levels.b();
  GridAxes axes;
  for (std::size_t i = 0; i < n; ++i) {
    axes.qs.push_back(levels.quantile((static_cast<double>(i) + 0.5) / static_cast<double>(n)));
  }
  if (domain == ResidualDomain::relaxed && !(e < b)) {
    axes.collapsed = true;
    axes.ts = axes.qs;
    return axes;
  }
  if (b < e) throw DomainError("no t satisfies e <= t <= b when b < e");
  if (b == e || n == 1) {
    axes.ts.push_back(e);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      axes.ts.push_back(e + (b - e) * static_cast<double>(j) / static_cast<double>(n - 1));
    }
  }
  return axes;
}

double place_x(const AssocOp& op, const GridAxes& axes, double q, double t) {
  if (axes.collapsed) return q;
  return op.g_inv(op.g(q) - op.g(t));
}

}  // namespace

BivariateGrlmp::BivariateGrlmp(AssocOp op, double lambda1, double lambda2, double lambda12,
                               double b)
    : op_(ensure_certified(std::move(op))), l1_(lambda1), l2_(lambda2), l12_(lambda12), b_(b),
      g_b_(0.0) {
  if (!(l1_ > 0.0) || !(l2_ > 0.0) || !std::isfinite(l1_) || !std::isfinite(l2_)) {
    throw DomainError("lambda1 and lambda2 must be positive and finite");
  }
  if (!(l12_ >= 0.0) || !std::isfinite(l12_)) {
    throw DomainError("lambda12 must be nonnegative and finite");
  }
  if (!std::isfinite(b_) || !op_.domain().contains(b_) || !(b_ > op_.domain().lower)) {
    throw DomainError("upper endpoint b must be a finite point of the operation domain");
  }
  g_b_ = op_.g(b_);
  if (!std::isfinite(g_b_)) throw DomainError("g(b) must be finite");
}

double BivariateGrlmp::joint_cdf(double x1, double x2) const {
  if (std::isnan(x1) || std::isnan(x2)) return std::nan("");
  if (!(x1 > lower()) || !(x2 > lower())) return 0.0;
  const double s1 = x1 >= b_ ? 0.0 : op_.g(x1) - g_b_;
  const double s2 = x2 >= b_ ? 0.0 : op_.g(x2) - g_b_;
  return std::exp(l1_ * s1 + l2_ * s2 + l12_ * std::min(s1, s2));
}

double BivariateGrlmp::ac_density_s(double s1, double s2) const {
  if (s1 < s2) return (l1_ + l12_) * l2_ * std::exp((l1_ + l12_) * s1 + l2_ * s2);
  if (s2 < s1) return (l2_ + l12_) * l1_ * std::exp((l2_ + l12_) * s2 + l1_ * s1);
  throw DomainError("absolutely continuous density is undefined on the diagonal");
}

double BivariateGrlmp::ac_density(double x1, double x2) const {
  if (!(x1 > lower()) || !(x1 < b_) || !(x2 > lower()) || !(x2 < b_)) {
    throw DomainError("density requested outside the open support");
  }
  if (x1 == x2) throw DomainError("absolutely continuous density is undefined on the diagonal");
  const double s1 = op_.g(x1) - g_b_;
  const double s2 = op_.g(x2) - g_b_;
  return ac_density_s(s1, s2) * op_.g_prime(x1) * op_.g_prime(x2);
}

GrlmpDistribution marginal(const BivariateGrlmp& d, int which) {
  if (which != 1 && which != 2) throw DomainError("marginal index must be 1 or 2");
  const double rate = (which == 1 ? d.lambda1() : d.lambda2()) + d.lambda12();
  return GrlmpDistribution(d.op(), rate, d.b());
}

GrlmpDistribution max_distribution(const BivariateGrlmp& d) {
  return GrlmpDistribution(d.op(), d.total_rate(), d.b());
}

double tie_probability(const BivariateGrlmp& d) { return d.lambda12() / d.total_rate(); }

bool is_independent(const BivariateGrlmp& d) { return d.lambda12() == 0.0; }

std::vector<std::pair<double, double>> sample_pairs(const BivariateGrlmp& d, Rng& rng,
                                                    std::size_t n) {
  if (n == 0) throw DomainError("n must be >= 1");
  const GrlmpDistribution u_law(d.op(), d.lambda1(), d.b());
  const GrlmpDistribution v_law(d.op(), d.lambda2(), d.b());
  const bool common = d.lambda12() > 0.0;
  const GrlmpDistribution w_law(d.op(), common ? d.lambda12() : 1.0, d.b());

  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_law.quantile(rng.uniform_open());
    const double v = v_law.quantile(rng.uniform_open());
    if (!common) {
      pairs.emplace_back(u, v);
      continue;
    }
    const double w = w_law.quantile(rng.uniform_open());
    pairs.emplace_back(std::max(u, w), std::max(v, w));
  }
  return pairs;
}

BivariateResidual gbrlmp_residual(const AssocOp& op, double b, const JointCdf& cdf,
                                  const JointCdf& shifted_cdf,
                                  std::span<const DiagonalTriple> grid, ResidualDomain domain) {
  std::vector<IncrementQuad> quads;
  quads.reserve(grid.size());
  for (const auto& tr : grid) quads.push_back({tr.x1, tr.x2, tr.t, tr.t});
  return increment_residual(op, b, cdf, shifted_cdf, quads, domain);
}

BivariateResidual gbrlmp_residual(const BivariateGrlmp& d, std::span<const DiagonalTriple> grid,
                                  ResidualDomain domain) {
  const JointCdf F = [&d](double x1, double x2) { return d.joint_cdf(x1, x2); };
  return gbrlmp_residual(d.op(), d.b(), F, F, grid, domain);
}

BivariateResidual direct_extension_residual(const BivariateGrlmp& d,
                                            std::span<const IncrementQuad> grid,
                                            ResidualDomain domain) {
  const JointCdf F = [&d](double x1, double x2) { return d.joint_cdf(x1, x2); };
  return increment_residual(d.op(), d.b(), F, F, grid, domain);
}

std::vector<DiagonalTriple> standard_gbrlmp_grid(const BivariateGrlmp& d, std::size_t n,
                                                 ResidualDomain domain) {
  if (n == 0) throw DomainError("grid size must be positive");
  const auto axes = grid_axes(max_distribution(d), n, domain);
  std::vector<DiagonalTriple> grid;
  for (double t : axes.ts) {
    for (double q1 : axes.qs) {
      for (double q2 : axes.qs) {
        grid.push_back({place_x(d.op(), axes, q1, t), place_x(d.op(), axes, q2, t), t});
      }
    }
  }
  return grid;
}

std::vector<IncrementQuad> standard_direct_extension_grid(const BivariateGrlmp& d,
                                                          std::size_t n,
                                                          ResidualDomain domain) {
  if (n == 0) throw DomainError("grid size must be positive");
  const auto axes = grid_axes(max_distribution(d), n, domain);
  std::vector<IncrementQuad> grid;
  for (std::size_t j1 = 0; j1 < axes.ts.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < axes.ts.size(); ++j2) {
      if (j1 == j2) continue;
      const double t1 = axes.ts[j1];
      const double t2 = axes.ts[j2];
      for (double q1 : axes.qs) {
        for (double q2 : axes.qs) {
          grid.push_back({place_x(d.op(), axes, q1, t1), place_x(d.op(), axes, q2, t2), t1, t2});
        }
      }
    }
  }
  return grid;
}

BivariateGrlmp CatalogEntry::make(double lambda1, double lambda2, double lambda12,
                                  double b) const {
  return BivariateGrlmp(builtin(op), lambda1, lambda2, lambda12, b);
}

std::vector<CatalogEntry> table1_catalog() {
  return {
      {"bivariate type 3 extreme value", BuiltinOpId::addition, "0", "g(x) = x",
       "x ∈ (−∞, b), b < ∞", "reversed generalized Pareto (type 3 extreme value)",
       "exp[c(x − b)]",
       "exp[λ1(x1 − b) + λ2(x2 − b) + λ12 min(x1 − b, x2 − b)]",
       "−∞ < xᵢ < b; λᵢ > 0, i = 1, 2; λ12 ≥ 0", 1.0},
      {"bivariate power function", BuiltinOpId::multiplication, "1", "g(x) = log x",
       "x ∈ (0, b), b < ∞", "power function", "(x/b)^c",
       "(x1/b)^λ1 (x2/b)^λ2 · e^{λ12 min[log(x1/b), log(x2/b)]}",
       "0 < xᵢ < b; λᵢ > 0, i = 1, 2; λ12 ≥ 0", 2.0},
      {"bivariate power function on (−1, b)", BuiltinOpId::shifted_multiplication, "0",
       "g(x) = log(x + 1)", "x ∈ (−1, b), b < ∞", "power function on (−1, b)",
       "((x+1)/(b+1))^c",
       "((x1+1)/(b+1))^λ1 ((x2+1)/(b+1))^λ2 e^{λ12 min[log((x1+1)/(b+1)), log((x2+1)/(b+1))]}",
       "−1 < xᵢ < b; λᵢ > 0, i = 1, 2; λ12 ≥ 0", 1.0},
      {"bivariate reflected Weibull", BuiltinOpId::neg_quadratic, "0", "g(x) = −x²",
       "x ∈ (−∞, 0)", "reflected Weibull", "e^{−cx²}",
       "exp[−λ1 x1² − λ2 x2² + λ12 min(−x1², −x2²)]",
       "−∞ < xᵢ < 0; λᵢ > 0, i = 1, 2; λ12 ≥ 0", 0.0},
  };
}

TruncatedBivariateGrlmp::TruncatedBivariateGrlmp(BivariateGrlmp base) : base_(std::move(base)) {
  const double e = base_.op().identity();
  if (!(e > base_.lower()) || !(e < base_.b())) {
    throw DomainError("truncation needs the identity strictly inside (inf A, b)");
  }
}

double TruncatedBivariateGrlmp::joint_cdf(double x1, double x2) const {
  if (x1 < identity() || x2 < identity()) return 0.0;
  return base_.joint_cdf(x1, x2);
}

DecompositionReport decompose(const TruncatedBivariateGrlmp& d, const QuadratureConfig& cfg) {
  if (cfg.nodes < 2) throw DomainError("decomposition quadrature needs at least 2 nodes");
  const BivariateGrlmp& base = d.base();
  const double tau = base.op().g(base.b()) - base.op().g(d.identity());
  const double k = base.total_rate();
  const double l1 = base.lambda1();
  const double l2 = base.lambda2();
  const double l12 = base.lambda12();

  DecompositionReport r;
  const double corner = std::exp(-k * tau);
  r.atoms.push_back({d.identity(), d.identity(), corner});
  r.edge_masses = {std::exp(-(l1 + l12) * tau) - corner, std::exp(-(l2 + l12) * tau) - corner};
  r.singular_mass = l12 / k * -std::expm1(-k * tau);

  // Both triangles of (-tau, 0)^2 in s-coordinates, where the density is a
  // product of exponentials concentrated within ~1/k of the corner s = 0.
  // Panels double in width away from the corner so that large k * tau does
  // not leave the peak between nodes.
  std::vector<double> edges{0.0};
  for (double w = std::min(tau, 1.0 / k); -edges.back() < tau; w *= 2.0) {
    edges.push_back(std::max(-tau, edges.back() - w));
  }
  std::reverse(edges.begin(), edges.end());
  const auto ac_mass = [&](std::size_t nodes) {
    const auto rule = gauss_legendre(nodes);
    const double below = integrate_triangle_panels(rule, edges, [&](double lo, double hi) {
      return base.ac_density_s(lo, hi);
    });
    const double above = integrate_triangle_panels(rule, edges, [&](double lo, double hi) {
      return base.ac_density_s(hi, lo);
    });
    return below + above;
  };
  r.ac_mass = ac_mass(cfg.nodes);
  r.ac_error_estimate = std::abs(r.ac_mass - ac_mass(cfg.nodes / 2));
  r.total = corner + r.edge_masses[0] + r.edge_masses[1] + r.singular_mass + r.ac_mass;
  if (!(r.ac_error_estimate <= cfg.tolerance)) {
    std::ostringstream msg;
    msg << "absolutely continuous mass error estimate " << r.ac_error_estimate
        << " exceeds tolerance " << cfg.tolerance;
    throw QuadratureError(msg.str());
  }
  return r;
}

}  // namespace grlmp
