#include <gtest/gtest.h>

#include "grlmp/errors.hpp"
#include "grlmp/spec_io.hpp"

using namespace grlmp;
using nlohmann::json;

TEST(SpecIo, ParseUnivariate) {
  const auto spec = parse_spec_text(R"({"family":"univariate","op":"multiplication","c":1,"b":2})");
  const auto& u = std::get<UnivariateSpec>(spec);
  EXPECT_EQ(u.op, BuiltinOpId::multiplication);
  EXPECT_EQ(u.c, 1.0);
  EXPECT_EQ(u.b, 2.0);
  EXPECT_FALSE(u.truncated);
  EXPECT_NEAR(u.distribution().cdf(1.0), 0.5, 1e-15);
}

TEST(SpecIo, ParseBivariateWithOpObject) {
  const auto spec = parse_spec_text(
      R"({"family":"bivariate","op":{"op":"addition"},"lambda1":1,"lambda2":2,"lambda12":0.5,"b":0})");
  const auto& s = std::get<BivariateSpec>(spec);
  EXPECT_EQ(s.lambda2, 2.0);
  EXPECT_EQ(s.distribution().total_rate(), 3.5);
}

TEST(SpecIo, RoundTrip) {
  const auto original = parse_spec_text(
      R"({"family":"bivariate","op":"multiplication","lambda1":1,"lambda2":1,"lambda12":1,"b":2,"truncated":true})");
  const auto j = spec_to_json(original);
  const auto again = parse_spec(j);
  EXPECT_EQ(spec_to_json(again), j);
  EXPECT_TRUE(std::get<BivariateSpec>(again).truncated);
}

TEST(SpecIo, Rejections) {
  const char* bad[] = {
      R"([1,2])",
      R"({"op":"addition","c":1,"b":0})",
      R"({"family":"trivariate","op":"addition"})",
      R"({"family":"univariate","op":"addition","c":1,"b":0,"extra":1})",
      R"({"family":"univariate","op":"division","c":1,"b":0})",
      R"({"family":"univariate","op":"custom","c":1,"b":0})",
      R"({"family":"univariate","op":"addition","c":-1,"b":0})",
      R"({"family":"univariate","op":"addition","c":"1","b":0})",
      R"({"family":"univariate","op":"addition","b":0})",
      R"({"family":"univariate","op":"neg_quadratic","c":1,"b":0,"truncated":true})",
      R"({"family":"bivariate","op":"addition","lambda1":1,"lambda2":1,"lambda12":-1,"b":0})",
      R"({"family":"univariate","op":"addition","c":1,"b":0,"test_hook":{"rate_factor":0}})",
      R"({not json)",
  };
  for (const char* text : bad) EXPECT_THROW(parse_spec_text(text), SpecError) << text;
}

TEST(SpecIo, TestHook) {
  const auto spec = parse_spec_text(
      R"({"family":"univariate","op":"addition","c":1,"b":0,"test_hook":{"rate_factor":1.5}})");
  const auto& u = std::get<UnivariateSpec>(spec);
  ASSERT_TRUE(u.hook.has_value());
  EXPECT_EQ(u.hook->rate_factor, 1.5);
  EXPECT_EQ(spec_to_json(spec)["test_hook"]["rate_factor"], 1.5);
}

TEST(SpecIo, ReportJson) {
  const TruncatedBivariateGrlmp t(
      BivariateGrlmp(builtin(BuiltinOpId::multiplication), 1, 1, 1, 2));
  const auto j = to_json(decompose(t));
  EXPECT_NEAR(j["atoms"][0]["mass"].get<double>(), 0.125, 1e-12);
  EXPECT_EQ(j["atoms"][0]["x1"].get<double>(), 1.0);
  EXPECT_TRUE(j.contains("singular_mass"));
  EXPECT_TRUE(j["edge_masses"].contains("x1_at_identity"));
  UnivariateFit fit;
  fit.c_hat = 2;
  EXPECT_EQ(to_json(fit)["c_hat"], 2.0);
}
