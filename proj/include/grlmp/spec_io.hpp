#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "grlmp/bivariate.hpp"
#include "grlmp/inference.hpp"
#include "grlmp/univariate.hpp"

namespace grlmp {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Verification-only corruption of the distribution function used by the
/// checks: rates in the "shifted" side of each identity and in the KS
/// reference CDF are multiplied by `rate_factor`.
struct TestHook {
  double rate_factor = 1.0;
};

struct UnivariateSpec {
  BuiltinOpId op = BuiltinOpId::addition;
  double c = 1.0;
  double b = 0.0;
  bool truncated = false;
  std::optional<TestHook> hook;

  GrlmpDistribution distribution() const;
  TruncatedGrlmp truncated_distribution() const;
};

struct BivariateSpec {
  BuiltinOpId op = BuiltinOpId::addition;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double lambda12 = 0.0;
  double b = 0.0;
  bool truncated = false;
  std::optional<TestHook> hook;

  BivariateGrlmp distribution() const;
  TruncatedBivariateGrlmp truncated_distribution() const;
};

using DistributionSpec = std::variant<UnivariateSpec, BivariateSpec>;

/// {"op": "<builtin id>"} or the bare id string.
BuiltinOpId parse_op(const nlohmann::json& j);
nlohmann::json op_to_json(BuiltinOpId id);

/// Validates against the family schemas (unknown keys rejected) and builds
/// the distribution once to check parameter constraints. Throws SpecError.
DistributionSpec parse_spec(const nlohmann::json& j);
DistributionSpec parse_spec_text(const std::string& text);
nlohmann::json spec_to_json(const DistributionSpec& spec);

nlohmann::json to_json(const UnivariateFit& fit);
nlohmann::json to_json(const BivariateFit& fit);
nlohmann::json to_json(const KsReport& report);
nlohmann::json to_json(const DecompositionReport& report);

}  // namespace grlmp
