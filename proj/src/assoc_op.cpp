#include "grlmp/assoc_op.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "grlmp/errors.hpp"

namespace grlmp {

namespace {

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

bool image_contains(const AssocOp& op, double v) {
  if (std::isnan(v)) return false;
  const auto& d = op.domain();
  const bool above = d.lower_closed ? v >= op.g_lower() : v > op.g_lower();
  const bool below = d.upper_closed ? v <= op.g_upper() : v < op.g_upper();
  return above && below;
}

}  // namespace

bool SupportInterval::contains(double x) const {
  if (std::isnan(x)) return false;
  const bool above = lower_closed ? x >= lower : x > lower;
  const bool below = upper_closed ? x <= upper : x < upper;
  return above && below;
}

std::string_view to_string(BuiltinOpId id) {
  switch (id) {
    case BuiltinOpId::addition: return "addition";
    case BuiltinOpId::multiplication: return "multiplication";
    case BuiltinOpId::shifted_multiplication: return "shifted_multiplication";
    case BuiltinOpId::neg_quadratic: return "neg_quadratic";
  }
  return "unknown";
}

std::optional<BuiltinOpId> parse_builtin_op(std::string_view name) {
  for (auto id : {BuiltinOpId::addition, BuiltinOpId::multiplication,
                  BuiltinOpId::shifted_multiplication, BuiltinOpId::neg_quadratic}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

void AssocOp::refresh_limits() {
  g_lower_ = g_(domain_.lower);
  g_upper_ = g_(domain_.upper);
}

AssocOp AssocOp::custom(std::string name, RealFn g, RealFn g_inv,
                        std::optional<RealFn> g_prime, double identity,
                        SupportInterval domain) {
  if (!(domain.lower < domain.upper)) {
    throw DomainError("operation domain is empty or degenerate");
  }
  if (!domain.contains(identity)) {
    throw DomainError("identity element lies outside the operation domain");
  }
  if (!g || !g_inv) throw DomainError("generator and its inverse are required");
  if (std::abs(g(identity)) > 1e-12) {
    throw DomainError("generator must vanish at the identity element");
  }
  AssocOp op;
  op.name_ = std::move(name);
  op.g_ = std::move(g);
  op.g_inv_ = std::move(g_inv);
  op.g_prime_ = std::move(g_prime);
  op.identity_ = identity;
  op.domain_ = domain;
  op.refresh_limits();
  return op;
}

double AssocOp::g_prime(double x) const {
  if (g_prime_) return (*g_prime_)(x);
  return g_prime_fallback(*this, x);
}

AssocOp AssocOp::scaled(double alpha) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("generator scale must be a positive finite number");
  }
  AssocOp op = *this;
  op.name_ = name_ + "*scaled";
  op.g_ = [g = g_, alpha](double x) { return alpha * g(x); };
  op.g_inv_ = [gi = g_inv_, alpha](double y) { return gi(y / alpha); };
  if (g_prime_) {
    op.g_prime_ = [gp = *g_prime_, alpha](double x) { return alpha * gp(x); };
  }
  op.refresh_limits();
  return op;
}

AssocOp builtin(BuiltinOpId id) {
  AssocOp op;
  op.builtin_ = id;
  op.name_ = std::string(to_string(id));
  op.certified_ = true;
  switch (id) {
    case BuiltinOpId::addition:
      op.g_ = [](double x) { return x; };
      op.g_inv_ = [](double y) { return y; };
      op.g_prime_ = [](double) { return 1.0; };
      op.identity_ = 0.0;
      op.domain_ = {-kInf, kInf, false, false};
      break;
    case BuiltinOpId::multiplication:
      op.g_ = [](double x) { return std::log(x); };
      op.g_inv_ = [](double y) { return std::exp(y); };
      op.g_prime_ = [](double x) { return 1.0 / x; };
      op.identity_ = 1.0;
      op.domain_ = {0.0, kInf, false, false};
      break;
    case BuiltinOpId::shifted_multiplication:
      op.g_ = [](double x) { return std::log1p(x); };
      op.g_inv_ = [](double y) { return std::expm1(y); };
      op.g_prime_ = [](double x) { return 1.0 / (1.0 + x); };
      op.identity_ = 0.0;
      op.domain_ = {-1.0, kInf, false, false};
      break;
    case BuiltinOpId::neg_quadratic:
      op.g_ = [](double x) { return -x * x; };
      op.g_inv_ = [](double y) { return -std::sqrt(-y); };
      op.g_prime_ = [](double x) { return -2.0 * x; };
      op.identity_ = 0.0;
      op.domain_ = {-kInf, 0.0, false, true};
      break;
  }
  op.refresh_limits();
  return op;
}

double combine(const AssocOp& op, double x, double y) {
  if (!op.domain().contains(x) || !op.domain().contains(y)) {
    throw DomainError("combine argument outside the operation domain");
  }
  if (y == op.identity()) return x;
  if (x == op.identity()) return y;
  const double sum = op.g(x) + op.g(y);
  if (!image_contains(op, sum)) {
    throw RangeError("combined value leaves the operation domain");
  }
  const double out = op.g_inv(sum);
  // the sum can be in range while g_inv overflows
  if (!op.domain().contains(out)) throw RangeError("combined value is not representable");
  return out;
}

double g_prime_fallback(const AssocOp& op, double x) {
  const auto& d = op.domain();
  if (!d.contains(x)) throw DomainError("derivative requested outside the domain");
  const double h = std::max(1e-6, 1e-6 * std::abs(x));
  const bool left = d.contains(x - h);
  const bool right = d.contains(x + h);
  if (left && right) return (op.g(x + h) - op.g(x - h)) / (2.0 * h);
  if (right) return (op.g(x + h) - op.g(x)) / h;
  if (left) return (op.g(x) - op.g(x - h)) / h;
  throw DomainError("no finite-difference stencil fits inside the domain");
}

bool AxiomReport::passed(double tolerance) const {
  return associativity <= tolerance && identity <= tolerance &&
         commutativity <= tolerance && scale_invariance <= tolerance && monotone &&
         injective && generator_zero_at_identity && triples_evaluated > 0;
}

std::vector<double> certification_grid(const SupportInterval& domain,
                                       std::size_t grid_size) {
  std::vector<double> grid;
  grid.reserve(grid_size);
  const double n = static_cast<double>(grid_size);
  if (domain.lower_finite() && domain.upper_finite()) {
    const double width = domain.upper - domain.lower;
    for (std::size_t i = 0; i < grid_size; ++i) {
      grid.push_back(domain.lower + width * (static_cast<double>(i) + 1.0) / (n + 1.0));
    }
  } else if (!domain.lower_finite() && !domain.upper_finite()) {
    const auto half = static_cast<long>(grid_size / 2);
    for (std::size_t i = 0; i < grid_size; ++i) {
      grid.push_back(static_cast<double>(static_cast<long>(i) - half));
    }
  } else {
    // Distances 10^-1.5 .. 10^1.5 from the finite endpoint.
    for (std::size_t i = 0; i < grid_size; ++i) {
      const double dist = std::pow(10.0, -1.5 + 3.0 * static_cast<double>(i) / (n - 1.0));
      grid.push_back(domain.lower_finite() ? domain.lower + dist : domain.upper - dist);
    }
    std::sort(grid.begin(), grid.end());
  }
  return grid;
}

AxiomReport certify_axioms(const AssocOp& op, std::size_t grid_size) {
  const auto& d = op.domain();
  if (!(d.lower < d.upper)) throw DomainError("operation domain is empty or degenerate");
  if (grid_size < 3) throw DomainError("certification grid needs at least 3 points");

  AxiomReport report;
  const auto grid = certification_grid(d, grid_size);
  report.grid_points = grid.size();
  report.generator_zero_at_identity = std::abs(op.g(op.identity())) <= 1e-12;

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(op.g(grid[i]) < op.g(grid[i + 1]))) report.monotone = false;
  }

  const AssocOp doubled = op.scaled(2.0);
  for (double x : grid) {
    const double round_trip = op.g_inv(op.g(x) + op.g(op.identity()));
    report.identity = std::max(report.identity, relative_gap(round_trip, x));

    double previous = -kInf;
    for (double y : grid) {
      double xy = 0.0;
      try {
        xy = combine(op, x, y);
      } catch (const RangeError&) {
        report.triples_skipped += grid.size();
        continue;
      }
      if (!(xy > previous)) report.injective = false;
      previous = xy;
      report.commutativity = std::max(report.commutativity, relative_gap(xy, combine(op, y, x)));
      report.scale_invariance =
          std::max(report.scale_invariance, relative_gap(xy, combine(doubled, x, y)));

      for (double z : grid) {
        try {
          const double left = combine(op, xy, z);
          const double right = combine(op, x, combine(op, y, z));
          report.associativity = std::max(report.associativity, relative_gap(left, right));
          ++report.triples_evaluated;
        } catch (const RangeError&) {
          ++report.triples_skipped;
        }
      }
    }
  }
  return report;
}

AssocOp require_certified(const AssocOp& op) {
  const AxiomReport r = certify_axioms(op, 12);
  if (!r.monotone) throw DomainError(op.name() + ": generator is not strictly increasing");
  if (!r.generator_zero_at_identity) {
    throw DomainError(op.name() + ": generator does not vanish at the identity");
  }
  if (!r.passed()) throw DomainError(op.name() + ": associative-operation axioms not satisfied");
  AssocOp copy = op;
  copy.certified_ = true;
  return copy;
}

}  // namespace grlmp
