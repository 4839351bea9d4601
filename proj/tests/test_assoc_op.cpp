#include <cmath>

#include <gtest/gtest.h>

#include "grlmp/assoc_op.hpp"
#include "grlmp/errors.hpp"

using namespace grlmp;

namespace {

constexpr BuiltinOpId kAllOps[] = {BuiltinOpId::addition, BuiltinOpId::multiplication,
                                   BuiltinOpId::shifted_multiplication,
                                   BuiltinOpId::neg_quadratic};

}  // namespace

TEST(AssocOp, CombineExamples) {
  EXPECT_EQ(combine(builtin(BuiltinOpId::addition), 2, 3), 5);
  EXPECT_NEAR(combine(builtin(BuiltinOpId::multiplication), 2, 3), 6, 1e-12);
  EXPECT_NEAR(combine(builtin(BuiltinOpId::neg_quadratic), -3, -4), -5, 1e-12);
  // (x+1)(y+1) - 1
  EXPECT_NEAR(combine(builtin(BuiltinOpId::shifted_multiplication), 1, 2), 5, 1e-12);
}

TEST(AssocOp, Identities) {
  EXPECT_EQ(builtin(BuiltinOpId::addition).identity(), 0);
  EXPECT_EQ(builtin(BuiltinOpId::multiplication).identity(), 1);
  EXPECT_EQ(builtin(BuiltinOpId::shifted_multiplication).identity(), 0);
  EXPECT_EQ(builtin(BuiltinOpId::neg_quadratic).identity(), 0);
  EXPECT_EQ(builtin(BuiltinOpId::neg_quadratic).g(-2), -4);
  for (auto id : kAllOps) {
    const auto op = builtin(id);
    EXPECT_EQ(op.g(op.identity()), 0.0) << op.name();
    EXPECT_TRUE(op.certified());
  }
}

TEST(AssocOp, CombineWithIdentityIsExact) {
  for (auto id : kAllOps) {
    const auto op = builtin(id);
    const double x = id == BuiltinOpId::neg_quadratic ? -0.3 : 0.7;
    EXPECT_EQ(combine(op, x, op.identity()), x);
    EXPECT_EQ(combine(op, op.identity(), x), x);
  }
}

TEST(AssocOp, CombineErrors) {
  EXPECT_THROW(combine(builtin(BuiltinOpId::multiplication), -1, 2), DomainError);
  EXPECT_THROW(combine(builtin(BuiltinOpId::neg_quadratic), 1, -2), DomainError);
  EXPECT_THROW(combine(builtin(BuiltinOpId::shifted_multiplication), -1.5, 0), DomainError);
  // 1e600 is in (0, inf) but not representable
  EXPECT_THROW(combine(builtin(BuiltinOpId::multiplication), 1e300, 1e300), RangeError);
  const auto clipped = AssocOp::custom(
      "clipped_addition", [](double x) { return x; }, [](double y) { return y; },
      [](double) { return 1.0; }, 0.0, SupportInterval{-1.0, 1.0, true, true});
  EXPECT_EQ(combine(clipped, 0.5, 0.5), 1.0);
  EXPECT_THROW(combine(clipped, 0.8, 0.8), RangeError);
}

TEST(AssocOp, Derivatives) {
  EXPECT_EQ(builtin(BuiltinOpId::addition).g_prime(7), 1);
  EXPECT_NEAR(builtin(BuiltinOpId::neg_quadratic).g_prime(-3), 6, 1e-6);
  EXPECT_NEAR(builtin(BuiltinOpId::multiplication).g_prime(2), 0.5, 1e-6);
  EXPECT_NEAR(builtin(BuiltinOpId::shifted_multiplication).g_prime(1), 0.5, 1e-6);
}

TEST(AssocOp, FallbackDerivativeMatchesAnalytic) {
  for (auto id : kAllOps) {
    const auto op = builtin(id);
    for (double x : certification_grid(op.domain(), 9)) {
      EXPECT_NEAR(g_prime_fallback(op, x), op.g_prime(x), 1e-5 * std::max(1.0, std::abs(op.g_prime(x))))
          << op.name() << " at " << x;
    }
  }
}

TEST(AssocOp, FallbackIsOneSidedAtClosedEndpoint) {
  // neg_quadratic at 0: right side leaves the domain, g'(0) = 0
  EXPECT_NEAR(g_prime_fallback(builtin(BuiltinOpId::neg_quadratic), 0.0), 0.0, 1e-5);
}

TEST(AssocOp, CertifyAdditionExact) {
  const auto r = certify_axioms(builtin(BuiltinOpId::addition), 10);
  EXPECT_EQ(r.associativity, 0.0);
  EXPECT_EQ(r.identity, 0.0);
  EXPECT_EQ(r.commutativity, 0.0);
  EXPECT_TRUE(r.passed());
}

TEST(AssocOp, CertifyBuiltins) {
  EXPECT_LT(certify_axioms(builtin(BuiltinOpId::multiplication), 20).associativity, 1e-9);
  EXPECT_LT(certify_axioms(builtin(BuiltinOpId::neg_quadratic), 20).identity, 1e-12);
  for (auto id : kAllOps) {
    const auto r = certify_axioms(builtin(id), 20);
    EXPECT_TRUE(r.passed()) << to_string(id);
    EXPECT_EQ(r.triples_evaluated + r.triples_skipped, 8000u);
    EXPECT_GT(r.triples_evaluated, 0u);
  }
}

TEST(AssocOp, CertifyRejectsSmallGrid) {
  EXPECT_THROW(certify_axioms(builtin(BuiltinOpId::addition), 2), DomainError);
}

TEST(AssocOp, CustomOpCertification) {
  // cube-root generator: x * y = cbrt(x^3 + y^3)
  const auto cube = AssocOp::custom(
      "cubic", [](double x) { return x * x * x; }, [](double y) { return std::cbrt(y); },
      std::nullopt, 0.0, SupportInterval{});
  EXPECT_FALSE(cube.certified());
  EXPECT_FALSE(cube.has_analytic_derivative());
  const auto certified = require_certified(cube);
  EXPECT_TRUE(certified.certified());
  EXPECT_NEAR(combine(certified, 3, 4), std::cbrt(91.0), 1e-12);
  EXPECT_NEAR(certified.g_prime(2), 12, 1e-4);
}

TEST(AssocOp, CustomOpRejectsNonzeroGeneratorAtIdentity) {
  EXPECT_THROW(AssocOp::custom(
                   "bad", [](double x) { return x + 1; }, [](double y) { return y - 1; },
                   std::nullopt, 0.0, SupportInterval{}),
               DomainError);
}

TEST(AssocOp, CustomNonAssociativeFailsCertification) {
  // g_inv is not the inverse of g, so combine is not associative
  const auto bad = AssocOp::custom(
      "broken", [](double x) { return x; }, [](double y) { return y + 0.01 * y * y; },
      std::nullopt, 0.0, SupportInterval{});
  EXPECT_FALSE(certify_axioms(bad, 10).passed());
  EXPECT_THROW(require_certified(bad), DomainError);
}

TEST(AssocOp, ScaledGeneratorGivesSameOperation) {
  for (auto id : kAllOps) {
    const auto op = builtin(id);
    const auto op3 = op.scaled(3.0);
    for (double x : certification_grid(op.domain(), 6)) {
      for (double y : certification_grid(op.domain(), 6)) {
        double a = 0;
        try {
          a = combine(op, x, y);
        } catch (const RangeError&) {
          continue;
        }
        EXPECT_NEAR(combine(op3, x, y), a, 1e-12 * std::max(1.0, std::abs(a)));
      }
    }
  }
}

TEST(AssocOp, ParseNames) {
  for (auto id : kAllOps) EXPECT_EQ(parse_builtin_op(to_string(id)), id);
  EXPECT_FALSE(parse_builtin_op("division").has_value());
}

TEST(SupportInterval, Closedness) {
  const SupportInterval half{-kInf, 0.0, false, true};
  EXPECT_TRUE(half.contains(0.0));
  EXPECT_FALSE(half.interior(0.0));
  EXPECT_FALSE(half.contains(1e-300));
  const SupportInterval pos{0.0, kInf, false, false};
  EXPECT_FALSE(pos.contains(0.0));
  EXPECT_TRUE(pos.lower_finite());
  EXPECT_FALSE(pos.upper_finite());
}
