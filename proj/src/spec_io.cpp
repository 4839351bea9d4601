#include "grlmp/spec_io.hpp"

#include <initializer_list>
#include <set>

#include "grlmp/errors.hpp"

namespace grlmp {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!names.count(key)) throw SpecError("unknown spec field \"" + key + "\"");
  }
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key)) throw SpecError(std::string("spec field \"") + key + "\" is required");
  const auto& v = j.at(key);
  if (!v.is_number()) throw SpecError(std::string("spec field \"") + key + "\" must be a number");
  return v.get<double>();
}

bool bool_field(const json& j, const char* key) {
  if (!j.contains(key)) return false;
  if (!j.at(key).is_boolean()) {
    throw SpecError(std::string("spec field \"") + key + "\" must be a boolean");
  }
  return j.at(key).get<bool>();
}

std::optional<TestHook> hook_field(const json& j) {
  if (!j.contains("test_hook")) return std::nullopt;
  const auto& h = j.at("test_hook");
  if (!h.is_object()) throw SpecError("spec field \"test_hook\" must be an object");
  reject_unknown_keys(h, {"rate_factor"});
  TestHook hook;
  hook.rate_factor = number_field(h, "rate_factor");
  if (!(hook.rate_factor > 0.0)) throw SpecError("test_hook.rate_factor must be positive");
  return hook;
}

template <typename Build>
void validate_build(Build&& build) {
  try {
    build();
  } catch (const DomainError& e) {
    throw SpecError(e.what());
  }
}

}  // namespace

GrlmpDistribution UnivariateSpec::distribution() const {
  return GrlmpDistribution(builtin(op), c, b);
}

TruncatedGrlmp UnivariateSpec::truncated_distribution() const {
  return TruncatedGrlmp(distribution());
}

BivariateGrlmp BivariateSpec::distribution() const {
  return BivariateGrlmp(builtin(op), lambda1, lambda2, lambda12, b);
}

TruncatedBivariateGrlmp BivariateSpec::truncated_distribution() const {
  return TruncatedBivariateGrlmp(distribution());
}

BuiltinOpId parse_op(const json& j) {
  std::string name;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    reject_unknown_keys(j, {"op"});
    if (!j.contains("op") || !j.at("op").is_string()) {
      throw SpecError("operation object needs a string \"op\" field");
    }
    name = j.at("op").get<std::string>();
  } else {
    throw SpecError("operation must be a string or {\"op\": ...} object");
  }
  if (name == "custom") {
    throw SpecError("custom operations are only available through the library API");
  }
  const auto id = parse_builtin_op(name);
  if (!id) throw SpecError("unknown operation \"" + name + "\"");
  return *id;
}

json op_to_json(BuiltinOpId id) { return json{{"op", std::string(to_string(id))}}; }

DistributionSpec parse_spec(const json& j) {
  if (!j.is_object()) throw SpecError("spec must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw SpecError("spec field \"family\" is required");
  }
  const auto family = j.at("family").get<std::string>();
  if (!j.contains("op")) throw SpecError("spec field \"op\" is required");

  if (family == "univariate") {
    reject_unknown_keys(j, {"family", "op", "c", "b", "truncated", "test_hook"});
    UnivariateSpec s;
    s.op = parse_op(j.at("op"));
    s.c = number_field(j, "c");
    s.b = number_field(j, "b");
    s.truncated = bool_field(j, "truncated");
    s.hook = hook_field(j);
    validate_build([&] { s.truncated ? (void)s.truncated_distribution() : (void)s.distribution(); });
    return s;
  }
  if (family == "bivariate") {
    reject_unknown_keys(
        j, {"family", "op", "lambda1", "lambda2", "lambda12", "b", "truncated", "test_hook"});
    BivariateSpec s;
    s.op = parse_op(j.at("op"));
    s.lambda1 = number_field(j, "lambda1");
    s.lambda2 = number_field(j, "lambda2");
    s.lambda12 = number_field(j, "lambda12");
    s.b = number_field(j, "b");
    s.truncated = bool_field(j, "truncated");
    s.hook = hook_field(j);
    validate_build([&] { s.truncated ? (void)s.truncated_distribution() : (void)s.distribution(); });
    return s;
  }
  throw SpecError("unknown family \"" + family + "\"");
}

DistributionSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec(j);
}

json spec_to_json(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        json j;
        if constexpr (std::is_same_v<T, UnivariateSpec>) {
          j = {{"family", "univariate"}, {"op", op_to_json(s.op)}, {"c", s.c}, {"b", s.b}};
        } else {
          j = {{"family", "bivariate"}, {"op", op_to_json(s.op)}, {"lambda1", s.lambda1},
               {"lambda2", s.lambda2},  {"lambda12", s.lambda12}, {"b", s.b}};
        }
        if (s.truncated) j["truncated"] = true;
        if (s.hook) j["test_hook"] = {{"rate_factor", s.hook->rate_factor}};
        return j;
      },
      spec);
}

json to_json(const UnivariateFit& fit) {
  return {{"c_hat", fit.c_hat},
          {"b_hat", fit.b_hat},
          {"b_estimated", fit.b_estimated},
          {"log_likelihood", fit.log_likelihood},
          {"n", fit.n}};
}

json to_json(const BivariateFit& fit) {
  return {{"lambda1_hat", fit.lambda1_hat},
          {"lambda2_hat", fit.lambda2_hat},
          {"lambda12_hat", fit.lambda12_hat},
          {"k_hat", fit.k_hat},
          {"k_max_hat", fit.k_max_hat},
          {"b_hat", fit.b_hat},
          {"m1_hat", fit.m1_hat},
          {"m2_hat", fit.m2_hat},
          {"consistency_defect", fit.consistency_defect},
          {"tie_count", fit.tie_count},
          {"n", fit.n},
          {"warnings", fit.warnings}};
}

json to_json(const KsReport& report) {
  return {{"statistic", report.statistic},
          {"n", report.n},
          {"critical_value_01", report.critical_value_01},
          {"pass", report.pass}};
}

json to_json(const DecompositionReport& report) {
  json atoms = json::array();
  for (const auto& a : report.atoms) atoms.push_back({{"x1", a.x1}, {"x2", a.x2}, {"mass", a.mass}});
  return {{"atoms", atoms},
          {"edge_masses",
           {{"x1_at_identity", report.edge_masses[0]}, {"x2_at_identity", report.edge_masses[1]}}},
          {"singular_mass", report.singular_mass},
          {"ac_mass", report.ac_mass},
          {"ac_error_estimate", report.ac_error_estimate},
          {"total", report.total}};
}

}  // namespace grlmp
