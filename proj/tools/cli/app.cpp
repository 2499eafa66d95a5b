#include "app.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "criteria.hpp"
#include "input_parsing.hpp"
#include "json_writer.hpp"
#include "vml/algebra_io.hpp"
#include "vml/field_io.hpp"
#include "vml/kernels.hpp"
#include "vml/vortex.hpp"

#ifndef VML_VERSION
#define VML_VERSION "0.0.0"
#endif

namespace vml::cli {

using nlohmann::json;

namespace {

struct OptionSpec {
  std::string name;
  std::string help;
  std::optional<std::string> fallback;  // nullopt: required
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table = {
      {"vortex-solve",
       "solve the abelian vortex equations on a flat torus",
       {{"torus", "L or L1,L2 side lengths (or use --volume)", ""},
        {"volume", "area of a square torus, used when --torus is absent", ""},
        {"points", "divisor as \"x+iy:m,...\"", std::nullopt},
        {"e", "gauge coupling", "1"},
        {"tau", "vacuum value squared", "1"},
        {"tol", "sup-norm residual tolerance", "1e-10"},
        {"grid", "samples per period", "256"},
        {"max-iters", "Newton iteration cap", "100"},
        {"field-csv", "optional CSV dump of |u|^2", ""}}},
      {"hecke-build",
       "build a Hecke modification tower from a datum file",
       {{"n", "rank", std::nullopt}, {"datum", "datum JSON path", std::nullopt}}},
      {"strata-enum",
       "enumerate strata of Sym^d with dimensions and Betti numbers",
       {{"d", "degree", std::nullopt}, {"n", "rank", std::nullopt}, {"g", "genus", std::nullopt}}},
      {"pi1-moduli",
       "fundamental group of the local vortex moduli space",
       {{"g", "genus", std::nullopt}, {"n", "rank", std::nullopt}, {"d", "degree", std::nullopt}}},
      {"pi1-nogo",
       "rank of irreducible local systems on the moduli space",
       {{"g", "genus", std::nullopt}, {"n", "rank", std::nullopt}, {"d", "degree", std::nullopt}}},
      {"pi1-abelianize",
       "abelian invariants of a finite presentation",
       {{"presentation", "presentation JSON path", std::nullopt}}},
      {"report-all", "run every acceptance check and write a digest-signed summary", {}},
  };
  return table;
}

const CommandSpec* find_command(const std::string& name) {
  for (const auto& c : commands())
    if (c.name == name) return &c;
  return nullptr;
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long to_int(const RunConfig& c, const std::string& key) {
  const std::string& s = c.parameters.at(key);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw UsageError("--" + key + " expects an integer, got '" + s + "'");
  return v;
}

double to_double(const RunConfig& c, const std::string& key) {
  const std::string& s = c.parameters.at(key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw UsageError("--" + key + " expects a number, got '" + s + "'");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Temp file in the target directory, then rename over the target.
void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + tmp + "'");
    f << text;
    f.flush();
    if (!f) throw Error(ErrorCode::InvalidArgument, "write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::InvalidArgument, "cannot move output into '" + path + "': " + ec.message());
  }
}

json diag(double value, double tolerance) { return {{"value", value}, {"tolerance", tolerance}}; }

// A quantity that must stay strictly above `floor` rather than below it.
json diag_floor(double value, double floor) {
  return {{"value", value}, {"tolerance", floor}, {"must_exceed", true}};
}

struct Outcome {
  json results = json::object();
  json diagnostics = json::object();
  int status = kExitOk;
};

Outcome vortex_solve(const RunConfig& c) {
  const FlatTorus torus = [&] {
    if (!c.parameters.at("torus").empty()) return parse_torus(c.parameters.at("torus"));
    if (!c.parameters.at("volume").empty()) return FlatTorus::square_of_area(to_double(c, "volume"));
    throw UsageError("vortex-solve needs --torus or --volume");
  }();
  const int n = static_cast<int>(to_int(c, "grid"));
  VortexProblem p{torus, Grid{n, n}, parse_points(c.parameters.at("points")),
                  to_double(c, "e"), to_double(c, "tau"), 1.0};
  const double tol = to_double(c, "tol");
  Outcome o;
  const BradlowReport bradlow = check_bradlow(p);
  o.results["bradlow"] = {{"feasible", bradlow.feasible}, {"margin", bradlow.margin}};
  o.diagnostics["bradlow_margin"] = diag_floor(bradlow.margin, 0.0);
  o.results["degree"] = p.degree();
  o.results["volume"] = torus.volume();
  if (!bradlow.feasible) {
    o.results["converged"] = false;
    o.status = kExitInfeasible;
    return o;
  }

  auto report = [&](const VortexSolution& s) {
    const EnergyReport e = energy_report(s);
    const double d = p.degree();
    const double e2 = p.e * p.e;
    const ScalarField f = s.modulus_squared();
    const double integral = f.integral();
    const double target = p.tau * torus.volume() - 4.0 * std::numbers::pi * d / e2;
    double fmin = f.values()[0];
    for (double x : f.values()) fmin = std::min(fmin, x);
    o.results["newton_iters"] = s.newton_iters;
    o.results["cg_iters"] = s.cg_iters;
    o.results["residual_history"] = s.residual_history;
    o.results["energy"] = {{"total", e.total},
                           {"bogomolnyi_bound", e.bogomolnyi_bound},
                           {"magnetic", e.magnetic},
                           {"potential", e.potential},
                           {"gradient", e.gradient}};
    o.results["flux"] = flux(s);
    o.results["integral_modulus_squared"] = integral;
    o.results["min_modulus_squared"] = fmin;
    o.diagnostics["residual_sup"] = diag(s.residual_sup, tol);
    if (d > 0) {
      o.diagnostics["flux_error"] = diag(std::abs(flux(s) - d), 1e-9 * d);
      o.diagnostics["energy_bound_relative_gap"] =
          diag(std::abs(e.total - e.bogomolnyi_bound) / e.bogomolnyi_bound, 1e-6);
      o.diagnostics["magnetic_potential_relative_mismatch"] =
          diag(std::abs(e.magnetic - e.potential) / e.potential, 1e-8);
    }
    o.diagnostics["integral_identity_relative_error"] =
        diag(std::abs(integral - target) / std::abs(target), 1e-8);
    o.diagnostics["bogomolnyi_remainder"] = diag(e.bogomolnyi_remainder, 1e-8 * std::max(1.0, d));
    const std::string& csv = c.parameters.at("field-csv");
    if (!csv.empty()) {
      std::ostringstream ss;
      write_csv(ss, f);
      write_atomically(csv, ss.str());
      o.results["field_csv"] = csv;
    }
  };

  try {
    const VortexSolution s = solve(p, tol, static_cast<int>(to_int(c, "max-iters")));
    o.results["converged"] = true;
    report(s);
  } catch (const NoConvergenceError& e) {
    o.results["converged"] = false;
    report(e.last_iterate());
    o.status = kExitInternal;
  }
  return o;
}

Outcome hecke_build(const RunConfig& c) {
  const auto n = static_cast<std::size_t>(to_int(c, "n"));
  if (n < 1) throw UsageError("--n must be at least 1");
  const TowerDatum datum = datum_from_json(parse_json_text(read_file(c.parameters.at("datum"))), n);
  const PolyMatrix m = build_tower(n, datum);
  const Polynomial det = normalized_determinant(m);
  const ExactDivisor phi = phi_divisor(m, datum.points());
  Outcome o;
  o.results["n"] = n;
  o.results["degree"] = datum.degree();
  o.results["datum"] = to_json(datum);
  o.results["matrix"] = to_json(m);
  o.results["determinant"] = {{"coefficients", to_json(det)}, {"text", det.to_string()}};
  o.results["divisor"] = to_json(phi);
  json types = json::array();
  int type_defect = 0, mult_defect = 0;
  for (const auto& g : datum.groups) {
    const auto t = local_type(m, g.point);
    int sum = 0;
    for (int a : t) sum += a;
    const int mult = static_cast<int>(g.hyperplanes.size());
    type_defect += std::abs(sum - mult);
    mult_defect += std::abs(phi.multiplicity_at(g.point) - mult);
    types.push_back({{"point", g.point.to_string()}, {"exponents", t}});
  }
  o.results["local_types"] = std::move(types);
  o.diagnostics["degree_defect"] = diag(std::abs(det.degree() - datum.degree()), 0.0);
  o.diagnostics["multiplicity_defect"] = diag(mult_defect, 0.0);
  o.diagnostics["local_type_defect"] = diag(type_defect, 0.0);
  return o;
}

Outcome strata_enum(const RunConfig& c) {
  const int d = static_cast<int>(to_int(c, "d"));
  const int n = static_cast<int>(to_int(c, "n"));
  const int g = static_cast<int>(to_int(c, "g"));
  Outcome o;
  json strata = json::array();
  for (const auto& p : enumerate_partitions(d)) strata.push_back(to_json(stratum_info(p, n, d)));
  o.results["partition_count"] = strata.size();
  o.results["strata"] = std::move(strata);
  if (g < 0) throw UsageError("--g must be non-negative");
  const auto betti = sym_betti(g, d);
  json b = json::array();
  int asym = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    b.push_back(betti[k].str());
    if (betti[k] != betti[betti.size() - 1 - k]) ++asym;
  }
  o.results["sym_betti"] = std::move(b);
  o.diagnostics["betti_palindrome_defect"] = diag(asym, 0.0);
  o.diagnostics["b1_minus_2g"] = diag(betti.size() > 1 ? double(betti[1] - 2 * g) : 0.0, 0.0);
  return o;
}

Outcome pi1_moduli(const RunConfig& c) {
  const int g = static_cast<int>(to_int(c, "g"));
  const ModuliPi1 m = moduli_pi1_details(g, static_cast<int>(to_int(c, "n")),
                                         static_cast<int>(to_int(c, "d")));
  Outcome o;
  o.results["invariants"] = to_json(m.invariants);
  o.results["presentation"] = to_json(m.presentation);
  o.results["route"] = m.route;
  o.results["certificate"] = m.certificate ? to_json(*m.certificate) : json(nullptr);
  o.diagnostics["free_rank_minus_2g"] = diag(m.invariants.free_rank - 2 * g, 0.0);
  o.diagnostics["torsion_count"] = diag(double(m.invariants.torsion.size()), 0.0);
  return o;
}

Outcome pi1_nogo(const RunConfig& c) {
  const int g = static_cast<int>(to_int(c, "g"));
  const NogoReport r = nogo_check(g, static_cast<int>(to_int(c, "n")),
                                  static_cast<int>(to_int(c, "d")));
  Outcome o;
  o.results["pi1_abelian"] = r.pi1_abelian;
  o.results["max_irreducible_rank"] = r.max_irreducible_rank;
  o.results["rep_variety_dim"] = r.rep_variety_dim;
  o.results["pi1"] = to_json(r.pi1);
  o.results["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  o.diagnostics["rep_variety_dim_minus_2g"] = diag(r.rep_variety_dim - 2 * g, 0.0);
  return o;
}

Outcome pi1_abelianize(const RunConfig& c) {
  const GroupPresentation p =
      presentation_from_json(parse_json_text(read_file(c.parameters.at("presentation"))));
  Outcome o;
  o.results["invariants"] = to_json(abelianization(p));
  o.results["num_generators"] = p.num_generators;
  o.results["num_relators"] = p.relators.size();
  return o;
}

Outcome report_all(const RunConfig& c) {
  Outcome o;
  json criteria = json::array();
  int passed = 0;
  for (const auto& r : acceptance::run_all(c.seed)) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    passed += r.passed ? 1 : 0;
  }
  o.results["criteria"] = std::move(criteria);
  o.results["passed_count"] = passed;
  o.results["all_passed"] = passed == acceptance::kCriterionCount;
  o.diagnostics["failed_count"] = diag(acceptance::kCriterionCount - passed, 0.0);
  if (passed != acceptance::kCriterionCount) o.status = kExitInternal;
  return o;
}

std::string hex(const unsigned char* data, unsigned len) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (unsigned i = 0; i < len; ++i) {
    s += digits[data[i] >> 4];
    s += digits[data[i] & 15];
  }
  return s;
}

// SHA-256 of the canonical text, keyed (HMAC) when VML_REPORT_KEY is set.
json sign(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  const char* key = std::getenv("VML_REPORT_KEY");
  if (key && *key) {
    HMAC(EVP_sha256(), key, static_cast<int>(std::strlen(key)),
         reinterpret_cast<const unsigned char*>(text.data()), text.size(), md, &len);
    return {{"algorithm", "hmac-sha256"}, {"digest", hex(md, len)}};
  }
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  return {{"algorithm", "sha256"}, {"digest", hex(md, len)}};
}

std::string normalize_subcommand(std::vector<std::string>& args) {
  if (args.empty()) return {};
  std::string name = args.front();
  if (args.size() > 1 && args[1].rfind("--", 0) != 0) {
    const std::string joined = name + "-" + args[1];
    if (find_command(joined)) {
      args.erase(args.begin());
      name = joined;
    }
  }
  args.erase(args.begin());
  return name;
}

// CLI flags win over --config entries, which win over defaults.
RunConfig resolve(const std::string& name, const std::vector<std::string>& args) {
  const CommandSpec* spec = find_command(name);
  CLI::App app{spec->help, "vml " + spec->name};
  std::map<std::string, std::string> given;
  for (const auto& opt : spec->options) app.add_option("--" + opt.name, given[opt.name], opt.help);
  std::string out, config_path;
  std::uint64_t seed = acceptance::kDefaultSeed;
  app.add_option("--out", out, "output path, '-' for stdout");
  app.add_option("--seed", seed, "seed for randomized runs");
  app.add_option("--config", config_path, "JSON file with the same keys as the flags");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  json config = json::object();
  if (!config_path.empty()) {
    config = parse_json_text(read_file(config_path));
    if (!config.is_object()) throw ParseError("config must be a JSON object", 1, 1);
  }
  auto from_config = [&](const std::string& key) -> std::optional<std::string> {
    if (!config.contains(key)) return std::nullopt;
    const json& v = config[key];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      return std::string(buf);
    }
    return v.dump();
  };

  RunConfig rc;
  rc.subcommand = name;
  for (const auto& opt : spec->options) {
    if (app.count("--" + opt.name)) rc.parameters[opt.name] = given[opt.name];
    else if (auto v = from_config(opt.name)) rc.parameters[opt.name] = *v;
    else if (opt.fallback) rc.parameters[opt.name] = *opt.fallback;
    else throw UsageError(name + ": missing required option --" + opt.name);
  }
  for (auto it = config.begin(); it != config.end(); ++it) {
    const std::string& k = it.key();
    const bool known = k == "out" || k == "seed" || k == "subcommand" ||
                       std::any_of(spec->options.begin(), spec->options.end(),
                                   [&](const OptionSpec& o) { return o.name == k; });
    if (!known) throw UsageError(name + ": unknown config key '" + k + "'");
  }
  if (app.count("--out")) rc.output_path = out;
  else if (auto v = from_config("out")) rc.output_path = *v;
  if (app.count("--seed")) rc.seed = seed;
  else if (auto v = from_config("seed")) rc.seed = std::stoull(*v);
  else rc.seed = seed;
  return rc;
}

}  // namespace

std::string usage() {
  std::ostringstream os;
  os << "usage: vml <command> [--option value ...] [--out PATH] [--seed S] [--config FILE]\n\n"
        "commands (nested forms such as 'vortex solve' are accepted too):\n";
  for (const auto& c : commands()) {
    os << "  " << c.name;
    os << std::string(c.name.size() < 16 ? 16 - c.name.size() : 1, ' ') << c.help << '\n';
    for (const auto& o : c.options) {
      os << "      --" << o.name << (o.fallback ? "" : " (required)") << "  " << o.help << '\n';
    }
  }
  os << "\nexit status: 0 ok, 1 error, 2 infeasible problem, 64 usage\n"
        "VML_THREADS caps worker threads; VML_REPORT_KEY turns the report digest into an HMAC.\n";
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> handlers = {
      {"vortex-solve", vortex_solve}, {"hecke-build", hecke_build},
      {"strata-enum", strata_enum},   {"pi1-moduli", pi1_moduli},
      {"pi1-nogo", pi1_nogo},         {"pi1-abelianize", pi1_abelianize},
      {"report-all", report_all}};
  const auto h = handlers.find(config.subcommand);
  if (h == handlers.end()) {
    err << "unknown command '" << config.subcommand << "'\n" << usage();
    return kExitUsage;
  }
  kernels::configure_threads_from_env();
  try {
    Outcome o = h->second(config);
    json echo = config.parameters;
    echo["subcommand"] = config.subcommand;
    echo["seed"] = config.seed;
    json envelope = {{"tool_version", VML_VERSION},
                     {"config_echo", std::move(echo)},
                     {"results", std::move(o.results)},
                     {"diagnostics", std::move(o.diagnostics)}};
    if (config.subcommand == "report-all") envelope["signature"] = sign(canonical_dump(envelope));
    const std::string text = canonical_dump(envelope);
    if (config.output_path == "-") out << text;
    else write_atomically(config.output_path, text);
    if (o.status == kExitInfeasible)
      err << "infeasible: e^2 tau Vol - 4 pi d = " << envelope["results"]["bradlow"]["margin"].get<double>()
          << " must be positive\n";
    return o.status;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const BradlowViolationError& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInternal;
  }
}

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw;
  if (args.empty() || args.front() == "--help" || args.front() == "-h" || args.front() == "help") {
    (args.empty() ? err : out) << usage();
    return args.empty() ? kExitUsage : kExitOk;
  }
  const std::string name = normalize_subcommand(args);
  if (!find_command(name)) {
    err << "unknown command '" << name << "'\n" << usage();
    return kExitUsage;
  }
  RunConfig config;
  try {
    config = resolve(name, args);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInternal;
  }
  return run(config, out, err);
}

}  // namespace vml::cli
