#include "grlmp/univariate.hpp"

#include <cmath>
#include <string>

#include "grlmp/errors.hpp"

namespace grlmp {

namespace {

std::string point_text(double x, double t) {
  return "(" + std::to_string(x) + ", " + std::to_string(t) + ")";
}

AssocOp ensure_certified(AssocOp op) {
  if (op.certified()) return op;
  return require_certified(op);
}

}  // namespace

GrlmpDistribution::GrlmpDistribution(AssocOp op, double c, double b)
    : op_(ensure_certified(std::move(op))), c_(c), b_(b), g_b_(0.0) {
  if (!(c_ > 0.0) || !std::isfinite(c_)) throw DomainError("rate c must be positive and finite");
  if (!std::isfinite(b_) || !op_.domain().contains(b_) || !(b_ > op_.domain().lower)) {
    throw DomainError("upper endpoint b must be a finite point of the operation domain");
  }
  g_b_ = op_.g(b_);
  if (!std::isfinite(g_b_)) throw DomainError("g(b) must be finite");
}

double GrlmpDistribution::cdf(double x) const {
  if (std::isnan(x)) return x;
  if (x >= b_) return 1.0;
  if (!(x > lower())) return 0.0;
  return std::exp(c_ * (op_.g(x) - g_b_));
}

double GrlmpDistribution::pdf(double x) const {
  if (!(x > lower()) || !(x < b_)) return 0.0;
  return c_ * op_.g_prime(x) * std::exp(c_ * (op_.g(x) - g_b_));
}

double GrlmpDistribution::quantile(double p) const {
  if (!(p > 0.0) || p > 1.0) throw DomainError("p out of range");
  if (p == 1.0) return b_;
  const double y = g_b_ + std::log(p) / c_;
  if (y <= op_.g_lower()) return lower();
  return op_.g_inv(y);
}

double GrlmpDistribution::reversed_hazard(double x) const {
  if (!(x > lower()) || !(x < b_)) {
    throw DomainError("reversed hazard requested outside the open support");
  }
  return c_ * op_.g_prime(x);
}

std::vector<double> GrlmpDistribution::sample(Rng& rng, std::size_t n) const {
  if (n == 0) throw DomainError("n must be >= 1");
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) draws.push_back(quantile(rng.uniform_open()));
  return draws;
}

GrlmpDistribution exponentiate(const GrlmpDistribution& d, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("exponent alpha must be positive and finite");
  }
  return GrlmpDistribution(d.op(), alpha * d.c(), d.b());
}

TruncatedGrlmp::TruncatedGrlmp(GrlmpDistribution base) : base_(std::move(base)), atom_mass_(0.0) {
  const double e = base_.op().identity();
  if (!(e > base_.lower()) || !(e < base_.b())) {
    throw DomainError("truncation needs the identity strictly inside (inf A, b)");
  }
  atom_mass_ = base_.cdf(e);
}

double TruncatedGrlmp::cdf(double x) const {
  if (x < atom_location()) return 0.0;
  return base_.cdf(x);
}

std::vector<double> TruncatedGrlmp::sample(Rng& rng, std::size_t n) const {
  if (n == 0) throw DomainError("n must be >= 1");
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform_open();
    draws.push_back(u <= atom_mass_ ? atom_location() : base_.quantile(u));
  }
  return draws;
}

GrlmpResidual grlmp_residual(const AssocOp& op, double b, const UnivariateCdf& cdf,
                             const UnivariateCdf& cdf_at_combined,
                             std::span<const std::pair<double, double>> grid,
                             ResidualDomain domain) {
  const double lower = op.domain().lower;
  const double e = op.identity();
  if (!(lower < e)) throw DomainError("residual needs inf A < e");
  const double f_e = cdf(e);

  GrlmpResidual out;
  for (const auto& [x, t] : grid) {
    const bool x_ok = x > lower && x < b;
    const bool t_ok = domain == ResidualDomain::strict ? (e <= t && t <= b)
                                                       : (t > lower && t <= b);
    if (!x_ok || !t_ok) {
      throw DomainError("residual grid pair " + point_text(x, t) + " violates the domain");
    }
    double xt = 0.0;
    try {
      xt = combine(op, x, t);
    } catch (const RangeError&) {
      throw DomainError("residual grid pair " + point_text(x, t) + " combines out of range");
    }
    if (xt > b) {
      throw DomainError("residual grid pair " + point_text(x, t) + " has x * t > b");
    }
    const double gap = std::abs(cdf(x) * cdf(t) - cdf_at_combined(xt) * f_e);
    if (out.evaluated == 0 || gap > out.max_abs) {
      out.max_abs = gap;
      out.argmax_point = {x, t};
    }
    ++out.evaluated;
  }
  return out;
}

GrlmpResidual grlmp_residual(const GrlmpDistribution& d,
                             std::span<const std::pair<double, double>> grid,
                             ResidualDomain domain) {
  const auto F = [&d](double x) { return d.cdf(x); };
  return grlmp_residual(d.op(), d.b(), F, F, grid, domain);
}

std::vector<std::pair<double, double>> standard_grlmp_grid(const GrlmpDistribution& d,
                                                           std::size_t nx, std::size_t nt,
                                                           ResidualDomain domain) {
  const AssocOp& op = d.op();
  const double e = op.identity();
  const double b = d.b();
  if (nx == 0 || nt == 0) throw DomainError("grid dimensions must be positive");

  std::vector<double> q(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    q[i] = d.quantile((static_cast<double>(i) + 0.5) / static_cast<double>(nx));
  }

  std::vector<std::pair<double, double>> grid;
  if (domain == ResidualDomain::relaxed && !(e < b)) {
    for (double x : q) {
      for (double t : q) {
        try {
          if (combine(op, x, t) <= b) grid.emplace_back(x, t);
        } catch (const RangeError&) {
        }
      }
    }
    return grid;
  }

  if (b < e) throw DomainError("no t satisfies e <= t <= b when b < e");
  std::vector<double> ts;
  if (b == e || nt == 1) {
    ts.push_back(e);
  } else {
    for (std::size_t j = 0; j < nt; ++j) {
      ts.push_back(e + (b - e) * static_cast<double>(j) / static_cast<double>(nt - 1));
    }
  }
  for (double t : ts) {
    const double gt = op.g(t);
    for (double qi : q) grid.emplace_back(op.g_inv(op.g(qi) - gt), t);
  }
  return grid;
}

}  // namespace grlmp
