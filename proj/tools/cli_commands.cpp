#include "cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grlmp/bivariate.hpp"
#include "grlmp/errors.hpp"
#include "grlmp/inference.hpp"
#include "grlmp/spec_io.hpp"
#include "grlmp/univariate.hpp"

namespace grlmp::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kFallbackSeed = 1;
constexpr double kResidualThreshold = 1e-12;
constexpr double kMassBalanceTolerance = 1e-3;

/// Exit with a specific code after printing a one-line diagnostic.
struct Failure {
  int code;
  std::string message;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kValidationError, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kValidationError, "cannot write " + *path};
  out << text;
}

DistributionSpec load_spec(const std::string& path) { return parse_spec_text(read_file(path)); }

struct SeedChoice {
  std::uint64_t value;
  std::string source;
};

SeedChoice resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return {*flag, "flag"};
  if (const char* env = std::getenv("GRLMP_DEFAULT_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0') {
      throw Failure{kValidationError, "GRLMP_DEFAULT_SEED is not an unsigned integer"};
    }
    return {static_cast<std::uint64_t>(v), "env"};
  }
  return {kFallbackSeed, "default"};
}

/// Numeric rows of a CSV file; a leading non-numeric line is a header.
std::vector<std::vector<double>> read_numeric_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    bool numeric = true;
    while (std::getline(fields, field, ',')) {
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str()) {
        numeric = false;
        break;
      }
      while (*end == ' ' || *end == '\t') ++end;
      if (*end != '\0') {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw Failure{kValidationError, "non-numeric row: " + line};
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Failure{kValidationError, "inconsistent column count in row: " + line};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------- catalog

std::string universal_cdf_note() { return "F(x) = exp[c(g(x) − g(b))], x < b; F(x) = 1, x ≥ b"; }

int cmd_catalog(const std::string& format) {
  const auto rows = table1_catalog();
  if (format == "json") {
    json uni = json::array();
    json bi = json::array();
    for (const auto& r : rows) {
      const UnivariateSpec us{r.op, 1.0, r.default_b, false, std::nullopt};
      const BivariateSpec bs{r.op, 1.0, 1.0, 1.0, r.default_b, false, std::nullopt};
      uni.push_back({{"name", r.univariate_name},
                     {"op", std::string(to_string(r.op))},
                     {"identity", r.identity},
                     {"generator", r.generator},
                     {"support", r.support},
                     {"cdf", r.univariate_cdf},
                     {"constraints", "c > 0"},
                     {"spec", spec_to_json(us)}});
      bi.push_back({{"name", r.name},
                    {"op", std::string(to_string(r.op))},
                    {"identity", r.identity},
                    {"generator", r.generator},
                    {"support", r.support},
                    {"cdf", r.bivariate_cdf},
                    {"constraints", r.constraints},
                    {"spec", spec_to_json(bs)}});
    }
    const json out = {{"general_form", universal_cdf_note()}, {"univariate", uni}, {"bivariate", bi}};
    std::cout << out.dump(2) << "\n";
    return kSuccess;
  }
  if (format != "table") throw Failure{kValidationError, "unknown format " + format};

  std::ostringstream os;
  os << "General form: " << universal_cdf_note() << "\n\n";
  os << "Univariate families\n";
  for (const auto& r : rows) {
    os << "  " << r.univariate_name << "\n"
       << "    operation: " << to_string(r.op) << "   identity e = " << r.identity
       << "   generator: " << r.generator << "\n"
       << "    F(x) = " << r.univariate_cdf << "   support: " << r.support << "   c > 0\n";
  }
  os << "\nBivariate families\n";
  int no = 1;
  for (const auto& r : rows) {
    os << "  " << no++ << ". " << r.name << "\n"
       << "    operation: " << to_string(r.op) << "   identity e = " << r.identity
       << "   generator: " << r.generator << "\n"
       << "    F(x1, x2) = " << r.bivariate_cdf << "\n"
       << "    " << r.constraints << "\n";
  }
  std::cout << os.str();
  return kSuccess;
}

// ----------------------------------------------------------------- sample

struct SampleOptions {
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  std::uint64_t n = 0;
  std::string out;
  std::string format = "csv";
};

int cmd_sample(const SampleOptions& o) {
  if (o.n < 1) throw Failure{kValidationError, "n must be ≥ 1"};
  if (o.format != "csv" && o.format != "json") {
    throw Failure{kValidationError, "unknown format " + o.format};
  }
  const auto spec = load_spec(o.spec_path);
  const auto seed = resolve_seed(o.seed);
  Rng rng(seed.value);
  const auto n = static_cast<std::size_t>(o.n);

  std::string body;
  if (const auto* us = std::get_if<UnivariateSpec>(&spec)) {
    const auto draws = us->truncated ? us->truncated_distribution().sample(rng, n)
                                     : us->distribution().sample(rng, n);
    if (o.format == "csv") {
      body = "x\n";
      for (double x : draws) body += fmt_double(x) + "\n";
    } else {
      body = json(draws).dump() + "\n";
    }
  } else {
    const auto& bs = std::get<BivariateSpec>(spec);
    auto pairs = sample_pairs(bs.distribution(), rng, n);
    if (bs.truncated) {
      const double e = builtin(bs.op).identity();
      for (auto& [x1, x2] : pairs) {
        x1 = std::max(x1, e);
        x2 = std::max(x2, e);
      }
    }
    if (o.format == "csv") {
      body = "x1,x2\n";
      for (const auto& [x1, x2] : pairs) body += fmt_double(x1) + "," + fmt_double(x2) + "\n";
    } else {
      json arr = json::array();
      for (const auto& [x1, x2] : pairs) arr.push_back({x1, x2});
      body = arr.dump() + "\n";
    }
  }
  write_output(o.out, body);

  const json sidecar = {{"seed", seed.value},
                        {"seed_source", seed.source},
                        {"n", o.n},
                        {"format", o.format},
                        {"spec", spec_to_json(spec)},
                        {"library_version", kLibraryVersion}};
  write_output(o.out + ".json", sidecar.dump(2) + "\n");
  return kSuccess;
}

// ------------------------------------------------------------------- eval

struct EvalOptions {
  std::string spec_path;
  std::optional<std::string> points_path;
  std::optional<std::string> at;
  std::string fn = "cdf";
  std::string format = "csv";
  std::optional<std::string> out;
};

int cmd_eval(const EvalOptions& o) {
  if (o.format != "csv" && o.format != "json") {
    throw Failure{kValidationError, "unknown format " + o.format};
  }
  const auto spec = load_spec(o.spec_path);
  const bool bivariate = std::holds_alternative<BivariateSpec>(spec);
  const std::size_t dims = bivariate ? 2 : 1;

  std::vector<std::vector<double>> points;
  if (o.points_path) points = read_numeric_rows(read_file(*o.points_path));
  if (o.at) {
    auto inline_rows = read_numeric_rows(*o.at);
    points.insert(points.end(), inline_rows.begin(), inline_rows.end());
  }
  if (points.empty()) throw Failure{kValidationError, "no evaluation points (use --points or --at)"};
  for (const auto& p : points) {
    if (p.size() != dims) {
      throw Failure{kValidationError, "each point needs " + std::to_string(dims) + " coordinate(s)"};
    }
  }

  std::function<double(const std::vector<double>&)> evaluate;
  if (const auto* us = std::get_if<UnivariateSpec>(&spec)) {
    const auto d = us->distribution();
    const std::optional<TruncatedGrlmp> td =
        us->truncated ? std::optional<TruncatedGrlmp>(us->truncated_distribution()) : std::nullopt;
    if (o.fn == "cdf") {
      evaluate = [d, td](const std::vector<double>& p) { return td ? td->cdf(p[0]) : d.cdf(p[0]); };
    } else if (o.fn == "pdf") {
      evaluate = [d](const std::vector<double>& p) { return d.pdf(p[0]); };
    } else if (o.fn == "quantile") {
      evaluate = [d](const std::vector<double>& p) { return d.quantile(p[0]); };
    } else if (o.fn == "rhr") {
      evaluate = [d](const std::vector<double>& p) { return d.reversed_hazard(p[0]); };
    } else {
      throw Failure{kValidationError, "unknown univariate function " + o.fn};
    }
  } else {
    const auto& bs = std::get<BivariateSpec>(spec);
    const auto d = bs.distribution();
    const std::optional<TruncatedBivariateGrlmp> td =
        bs.truncated ? std::optional<TruncatedBivariateGrlmp>(bs.truncated_distribution())
                     : std::nullopt;
    if (o.fn == "cdf") {
      evaluate = [d, td](const std::vector<double>& p) {
        return td ? td->joint_cdf(p[0], p[1]) : d.joint_cdf(p[0], p[1]);
      };
    } else if (o.fn == "pdf") {
      evaluate = [d](const std::vector<double>& p) { return d.ac_density(p[0], p[1]); };
    } else {
      throw Failure{kValidationError, "unknown bivariate function " + o.fn};
    }
  }

  std::size_t successes = 0;
  std::ostringstream csv;
  json rows = json::array();
  csv << (bivariate ? "x1,x2" : "x") << ",value,error\n";
  for (const auto& p : points) {
    std::optional<double> value;
    std::string error;
    try {
      value = evaluate(p);
      ++successes;
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (double c : p) csv << fmt_double(c) << ",";
    csv << (value ? fmt_double(*value) : "") << "," << error << "\n";
    json row = {{"point", p}};
    row["value"] = value ? json(*value) : json(nullptr);
    if (!error.empty()) row["error"] = error;
    rows.push_back(row);
  }
  const json report = {{"function", o.fn}, {"spec", spec_to_json(spec)}, {"results", rows}};
  write_output(o.out, o.format == "csv" ? csv.str() : report.dump(2) + "\n");
  return successes > 0 ? kSuccess : kValidationError;
}

// -------------------------------------------------------------------- fit

struct FitOptions {
  std::string data_path;
  std::string op;
  std::string b = "estimate";
  double tie_tolerance = 0.0;
  std::optional<std::string> out;
};

int cmd_fit(const FitOptions& o) {
  const auto op_id = parse_builtin_op(o.op);
  if (!op_id) throw Failure{kValidationError, "unknown operation " + o.op};
  const AssocOp op = builtin(*op_id);
  std::optional<double> b;
  if (o.b != "estimate") {
    char* end = nullptr;
    const double v = std::strtod(o.b.c_str(), &end);
    if (end == o.b.c_str() || *end != '\0') {
      throw Failure{kValidationError, "--b must be a number or \"estimate\""};
    }
    b = v;
  }
  const auto rows = read_numeric_rows(read_file(o.data_path));
  if (rows.empty()) throw DegenerateError("data file has no observations");

  json report = {{"op", std::string(to_string(*op_id))},
                 {"data", o.data_path},
                 {"library_version", kLibraryVersion}};
  if (rows.front().size() == 1) {
    std::vector<double> data;
    for (const auto& r : rows) data.push_back(r[0]);
    const auto fit = fit_univariate(data, op, b);
    report["family"] = "univariate";
    report["estimates"] = to_json(fit);
    report["warnings"] = json::array();
  } else if (rows.front().size() == 2) {
    std::vector<std::pair<double, double>> pairs;
    for (const auto& r : rows) pairs.emplace_back(r[0], r[1]);
    const auto fit = fit_bivariate(pairs, op, b, o.tie_tolerance);
    report["family"] = "bivariate";
    report["estimates"] = to_json(fit);
    report["tie_tolerance"] = o.tie_tolerance;
    report["warnings"] = fit.warnings;
  } else {
    throw Failure{kValidationError, "data must have one or two columns"};
  }
  write_output(o.out, report.dump(2) + "\n");
  return kSuccess;
}

// ----------------------------------------------------------------- verify

struct Check {
  std::string name;
  std::string suite;
  double statistic;
  double threshold;
  bool pass;
  json detail = json::object();
};

json check_json(const Check& c) {
  json j = {{"name", c.name},           {"suite", c.suite},
            {"statistic", c.statistic}, {"threshold", c.threshold},
            {"pass", c.pass}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Check ks_check(const std::string& name, const std::string& suite, std::span<const double> data,
               const std::function<double(double)>& cdf) {
  const auto ks = ks_test(data, cdf);
  return {name, suite, ks.statistic, ks.critical_value_01, ks.pass, {{"n", ks.n}}};
}

Check tie_check(std::size_t ties, std::size_t n, double p) {
  const double frac = static_cast<double>(ties) / static_cast<double>(n);
  const double band = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return {"tie_fraction", "ties", std::abs(frac - p), band, std::abs(frac - p) <= band,
          {{"tie_fraction", frac}, {"tie_probability", p}, {"n", n}}};
}

std::vector<Check> verify_univariate(const UnivariateSpec& s, const std::vector<std::string>& suites,
                                     std::uint64_t seed, std::size_t n) {
  const auto want = [&](const char* name) {
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };
  const double factor = s.hook ? s.hook->rate_factor : 1.0;
  const auto d = s.distribution();
  const GrlmpDistribution reference(d.op(), d.c() * factor, d.b());
  std::vector<Check> checks;

  if (want("grlmp")) {
    const auto F = [&d](double x) { return d.cdf(x); };
    const auto G = [&reference](double x) { return reference.cdf(x); };
    const auto grid = standard_grlmp_grid(d, 30, 30);
    const auto r = grlmp_residual(d.op(), d.b(), F, G, grid);
    checks.push_back({"grlmp_residual", "grlmp", r.max_abs, kResidualThreshold,
                      r.max_abs <= kResidualThreshold, {{"grid_points", r.evaluated}}});
    if (!(d.op().identity() < d.b())) {
      const auto relaxed = standard_grlmp_grid(d, 30, 30, ResidualDomain::relaxed);
      const auto rr = grlmp_residual(d.op(), d.b(), F, G, relaxed, ResidualDomain::relaxed);
      checks.push_back({"grlmp_residual_relaxed", "grlmp", rr.max_abs, kResidualThreshold,
                        rr.max_abs <= kResidualThreshold, {{"grid_points", rr.evaluated}}});
    }
  }
  if (want("ks")) {
    Rng rng(seed);
    if (s.truncated) {
      const auto td = s.truncated_distribution();
      const auto draws = td.sample(rng, n);
      std::vector<double> continuous;
      for (double x : draws) {
        if (x != td.atom_location()) continuous.push_back(x);
      }
      const double atom = reference.cdf(td.atom_location());
      checks.push_back(ks_check("ks_continuous_part", "ks", continuous, [&](double x) {
        return (reference.cdf(x) - atom) / (1.0 - atom);
      }));
    } else {
      const auto draws = d.sample(rng, n);
      checks.push_back(ks_check("ks_self_test", "ks", draws,
                                [&reference](double x) { return reference.cdf(x); }));
    }
  }
  return checks;
}

std::vector<Check> verify_bivariate(const BivariateSpec& s, const std::vector<std::string>& suites,
                                    std::uint64_t seed, std::size_t n) {
  const auto want = [&](const char* name) {
    return std::find(suites.begin(), suites.end(), name) != suites.end();
  };
  const double factor = s.hook ? s.hook->rate_factor : 1.0;
  const auto d = s.distribution();
  const BivariateGrlmp reference(d.op(), d.lambda1() * factor, d.lambda2() * factor,
                                 d.lambda12() * factor, d.b());
  std::vector<Check> checks;

  if (want("gbrlmp")) {
    const JointCdf F = [&d](double a, double b) { return d.joint_cdf(a, b); };
    const JointCdf G = [&reference](double a, double b) { return reference.joint_cdf(a, b); };
    const auto grid = standard_gbrlmp_grid(d, 10);
    const auto r = gbrlmp_residual(d.op(), d.b(), F, G, grid);
    checks.push_back({"gbrlmp_residual", "gbrlmp", r.max_abs, kResidualThreshold,
                      r.max_abs <= kResidualThreshold, {{"grid_points", r.evaluated}}});
    if (!(d.op().identity() < d.b())) {
      const auto relaxed = standard_gbrlmp_grid(d, 10, ResidualDomain::relaxed);
      const auto rr = gbrlmp_residual(d.op(), d.b(), F, G, relaxed, ResidualDomain::relaxed);
      checks.push_back({"gbrlmp_residual_relaxed", "gbrlmp", rr.max_abs, kResidualThreshold,
                        rr.max_abs <= kResidualThreshold, {{"grid_points", rr.evaluated}}});
    }
  }

  const bool need_pairs = want("ks") || want("max") || want("ties");
  std::vector<std::pair<double, double>> pairs;
  if (need_pairs) {
    Rng rng(seed);
    pairs = sample_pairs(d, rng, n);
  }
  if (want("ks")) {
    std::vector<double> first;
    std::vector<double> second;
    for (const auto& [a, b] : pairs) {
      first.push_back(a);
      second.push_back(b);
    }
    const auto m1 = marginal(reference, 1);
    const auto m2 = marginal(reference, 2);
    checks.push_back(ks_check("ks_marginal_1", "ks", first, [&m1](double x) { return m1.cdf(x); }));
    checks.push_back(ks_check("ks_marginal_2", "ks", second, [&m2](double x) { return m2.cdf(x); }));
  }
  if (want("max")) {
    std::vector<double> maxima;
    for (const auto& [a, b] : pairs) maxima.push_back(std::max(a, b));
    const auto mx = max_distribution(reference);
    checks.push_back(ks_check("ks_max_distribution", "max", maxima,
                              [&mx](double x) { return mx.cdf(x); }));
  }
  if (want("ties")) {
    std::size_t ties = 0;
    for (const auto& [a, b] : pairs) ties += (a == b) ? 1 : 0;
    checks.push_back(tie_check(ties, pairs.size(), tie_probability(reference)));
  }
  if (want("mass") && s.truncated) {
    const auto report = decompose(s.truncated_distribution());
    const double gap = std::abs(report.total - 1.0);
    checks.push_back({"mass_balance", "mass", gap, kMassBalanceTolerance,
                      gap <= kMassBalanceTolerance, to_json(report)});
  }
  return checks;
}

struct VerifyOptions {
  std::string spec_path;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::uint64_t n = 20000;
  std::optional<std::string> out;
};

int cmd_verify(const VerifyOptions& o) {
  if (o.n < 1) throw Failure{kValidationError, "n must be ≥ 1"};
  const auto spec = load_spec(o.spec_path);
  const bool bivariate = std::holds_alternative<BivariateSpec>(spec);
  const std::vector<std::string> available =
      bivariate ? std::vector<std::string>{"gbrlmp", "ks", "max", "ties", "mass"}
                : std::vector<std::string>{"grlmp", "ks"};

  std::vector<std::string> suites;
  std::istringstream list(o.suite);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item == "all") {
      suites.insert(suites.end(), available.begin(), available.end());
    } else if (std::find(available.begin(), available.end(), item) != available.end()) {
      suites.push_back(item);
    } else {
      throw Failure{kValidationError, "suite \"" + item + "\" is not available for this family"};
    }
  }
  if (suites.empty()) throw Failure{kValidationError, "no suite selected"};

  const auto seed = resolve_seed(o.seed);
  const auto n = static_cast<std::size_t>(o.n);
  const auto checks = bivariate
                          ? verify_bivariate(std::get<BivariateSpec>(spec), suites, seed.value, n)
                          : verify_univariate(std::get<UnivariateSpec>(spec), suites, seed.value, n);

  json arr = json::array();
  std::optional<std::string> first_failure;
  for (const auto& c : checks) {
    arr.push_back(check_json(c));
    if (!c.pass && !first_failure) first_failure = c.name;
  }
  const json report = {{"spec", spec_to_json(spec)},
                       {"seed", seed.value},
                       {"seed_source", seed.source},
                       {"n", o.n},
                       {"checks", arr},
                       {"pass", !first_failure.has_value()},
                       {"library_version", kLibraryVersion}};
  write_output(o.out, report.dump(2) + "\n");
  if (first_failure) {
    std::cerr << "verification failed: " << *first_failure << "\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

// -------------------------------------------------------------- decompose

struct DecomposeOptions {
  std::string spec_path;
  std::size_t quad_nodes = 64;
  std::optional<std::string> out;
};

int cmd_decompose(const DecomposeOptions& o) {
  const auto spec = load_spec(o.spec_path);
  const auto* bs = std::get_if<BivariateSpec>(&spec);
  if (!bs || !bs->truncated) {
    throw Failure{kValidationError, "decompose needs a bivariate spec with \"truncated\": true"};
  }
  QuadratureConfig cfg;
  cfg.nodes = o.quad_nodes;
  if (cfg.nodes < 2) throw Failure{kValidationError, "--quad-nodes must be at least 2"};
  const auto report = decompose(bs->truncated_distribution(), cfg);
  const bool balanced = std::abs(report.total - 1.0) <= kMassBalanceTolerance;
  json j = to_json(report);
  j["spec"] = spec_to_json(spec);
  j["quad_nodes"] = cfg.nodes;
  j["mass_balance_tolerance"] = kMassBalanceTolerance;
  j["mass_balance_ok"] = balanced;
  write_output(o.out, j.dump(2) + "\n");
  if (!balanced) {
    std::cerr << "error: mass balance |total - 1| exceeds " << kMassBalanceTolerance << "\n";
    return kToleranceFailure;
  }
  return kSuccess;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Distributions characterized by the generalized reversed lack of memory property"};
  app.require_subcommand(1);

  std::string catalog_format = "table";
  auto* catalog = app.add_subcommand("catalog", "List the built-in families");
  catalog->add_option("--format", catalog_format, "table or json");

  SampleOptions so;
  auto* sample = app.add_subcommand("sample", "Draw samples to CSV with a JSON sidecar");
  sample->add_option("--spec", so.spec_path, "distribution spec JSON")->required();
  sample->add_option("--seed", so.seed, "64-bit seed (default: $GRLMP_DEFAULT_SEED)");
  sample->add_option("--n", so.n, "number of draws")->required();
  sample->add_option("--out", so.out, "output path; sidecar is <out>.json")->required();
  sample->add_option("--format", so.format, "csv or json");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "Evaluate cdf/pdf/quantile/rhr at points");
  eval->add_option("--spec", eo.spec_path, "distribution spec JSON")->required();
  eval->add_option("--points", eo.points_path, "CSV file of points");
  eval->add_option("--at", eo.at, "inline point, e.g. 0.5 or -1,-2");
  eval->add_option("--fn", eo.fn, "cdf, pdf, quantile, rhr");
  eval->add_option("--format", eo.format, "csv or json");
  eval->add_option("--out", eo.out, "output path (default stdout)");

  FitOptions fo;
  auto* fit = app.add_subcommand("fit", "Estimate parameters from a CSV sample");
  fit->add_option("--data", fo.data_path, "CSV with one or two columns")->required();
  fit->add_option("--op", fo.op, "built-in operation id")->required();
  fit->add_option("--b", fo.b, "upper endpoint or \"estimate\"");
  fit->add_option("--tie-tolerance", fo.tie_tolerance, "relative tie tolerance for pairs");
  fit->add_option("--out", fo.out, "output path (default stdout)");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run invariant checks on a spec");
  verify->add_option("--spec", vo.spec_path, "distribution spec JSON")->required();
  verify->add_option("--suite", vo.suite, "all or comma list of suites");
  verify->add_option("--seed", vo.seed, "64-bit seed (default: $GRLMP_DEFAULT_SEED)");
  verify->add_option("--n", vo.n, "Monte Carlo sample size");
  verify->add_option("--out", vo.out, "output path (default stdout)");

  DecomposeOptions dopt;
  auto* decomp = app.add_subcommand("decompose", "Point/line/area mass split of a truncated spec");
  decomp->add_option("--spec", dopt.spec_path, "bivariate truncated spec JSON")->required();
  decomp->add_option("--quad-nodes", dopt.quad_nodes, "Gauss-Legendre nodes per axis");
  decomp->add_option("--out", dopt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kValidationError;
  }

  try {
    if (*catalog) return cmd_catalog(catalog_format);
    if (*sample) return cmd_sample(so);
    if (*eval) return cmd_eval(eo);
    if (*fit) return cmd_fit(fo);
    if (*verify) return cmd_verify(vo);
    if (*decomp) return cmd_decompose(dopt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegenerateData;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kToleranceFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace grlmp::cli
