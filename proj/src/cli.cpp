#include "lics/cli.hpp"

#include "lics/error.hpp"
#include "lics/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace lics::cli {

namespace {

using io::json;

struct RunConfig {
  std::string command;
  std::string algebra_path;
  std::vector<std::string> subspace_paths;
  std::string family;
  std::string params_path;
  std::vector<std::string> targets;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  double tolerance = 1e-9;
  std::string out_path;
};

/// Outcome of a command: the report and the exit code it maps to.
struct Outcome {
  json report;
  int code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json meta(const std::string& command, const std::string& hashed_input) {
  return json{{"tool", std::string("lics ") + LICS_VERSION},
              {"command", command},
              {"input_hash", io::fnv1a_hex(hashed_input)}};
}

std::string length_prefixed(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

LieAlgebra load_algebra(const std::string& path, std::string& hashed) {
  if (path.empty()) throw UsageError("--algebra is required");
  const std::string text = io::read_file(path);
  hashed += length_prefixed(text);
  return io::algebra_from_json(io::parse_json(text), JacobiCheck::Skip);
}

json jacobi_failure(const LieAlgebra& g, const std::vector<JacobiViolation>& violations) {
  json list = json::array();
  for (const auto& v : violations) {
    list.push_back(json{{"i", v.i + 1}, {"j", v.j + 1}, {"k", v.k + 1}, {"residual", io::to_json(v.residual)}});
  }
  return json{{"valid", false}, {"dim", g.dim()}, {"violations", list}};
}

std::vector<Param> parse_tuple(const json& tuple) {
  std::vector<Param> out;
  if (tuple.is_string()) {
    out.push_back(Param::parse(tuple.get<std::string>()));
    return out;
  }
  if (!tuple.is_array()) throw Error(Errc::Parse, "parameter tuple must be a string or an array of strings");
  for (const auto& x : tuple) {
    if (!x.is_string()) throw Error(Errc::Parse, "parameters are gauss-strings or \"p:q\" pairs");
    out.push_back(Param::parse(x.get<std::string>()));
  }
  return out;
}

std::vector<std::vector<Param>> load_params(const std::string& path, std::string& hashed) {
  if (path.empty()) throw UsageError("--params is required");
  const std::string text = io::read_file(path);
  hashed += length_prefixed(text);
  json j = io::parse_json(text);
  if (j.is_object() && j.contains("params")) j = j["params"];
  if (!j.is_array()) throw Error(Errc::Parse, "parameter file must hold an array of tuples");
  std::vector<std::vector<Param>> out;
  for (const auto& t : j) out.push_back(parse_tuple(t));
  if (out.empty()) throw UsageError("empty parameter list");
  return out;
}

/// "NAME(p1,p2,...)"
PathTarget parse_target(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') {
    throw UsageError("target must look like NAME(PARAM,...), got '" + text + "'");
  }
  const ParamFamily& family = find_family(text.substr(0, open));
  std::vector<Param> params;
  std::stringstream inner(text.substr(open + 1, text.size() - open - 2));
  for (std::string item; std::getline(inner, item, ',');) params.push_back(Param::parse(item));
  return {text, evaluate_family(family, params)};
}

Outcome cmd_validate(const RunConfig& cfg) {
  std::string hashed = "validate";
  const LieAlgebra g = load_algebra(cfg.algebra_path, hashed);
  const auto violations = validate_jacobi(g);
  Outcome o;
  if (violations.empty()) {
    o.report = json{{"valid", true}, {"dim", g.dim()}, {"violations", json::array()}};
  } else {
    o.report = jacobi_failure(g, violations);
    o.code = kNegative;
  }
  o.report["meta"] = meta("validate", hashed);
  return o;
}

Outcome cmd_classify(const RunConfig& cfg) {
  std::string hashed = "classify";
  const LieAlgebra g = load_algebra(cfg.algebra_path, hashed);
  if (cfg.subspace_paths.size() != 1) throw UsageError("classify takes exactly one --subspace");
  const std::string text = io::read_file(cfg.subspace_paths.front());
  hashed += length_prefixed(text);
  const Subspace t = io::subspace_from_json(io::parse_json(text));
  Outcome o;
  if (const auto violations = validate_jacobi(g); !violations.empty()) {
    o.report = jacobi_failure(g, violations);
    o.code = kNegative;
  } else {
    if (t.ambient_dim() != g.dim() || 2 * t.dim() != g.dim()) {
      throw Error(Errc::DimensionMismatch, "subspace must be a " + std::to_string(g.dim() / 2) +
                                               "-plane in C^" + std::to_string(g.dim()) + ", got dim " +
                                               std::to_string(t.dim()) + " in C^" + std::to_string(t.ambient_dim()));
    }
    o.report = io::classification_report(g, t);
    if (!o.report["in_V"].get<bool>()) o.code = kNegative;
  }
  o.report["meta"] = meta("classify", hashed);
  return o;
}

Outcome cmd_catalog(const RunConfig&) {
  json families = json::array();
  for (const auto& f : list_catalog()) {
    families.push_back(json{{"name", f.name}, {"arity", f.arity}, {"notes", f.notes}});
  }
  return {json{{"families", families}, {"meta", meta("catalog", "catalog")}}, kOk};
}

Outcome cmd_sample(const RunConfig& cfg) {
  if (!cfg.count || *cfg.count == 0) throw UsageError("sample needs --count >= 1");
  if (!cfg.seed) throw UsageError("sample needs --seed");
  std::string hashed = "sample";
  const LieAlgebra g = load_algebra(cfg.algebra_path, hashed);
  hashed += "|" + std::to_string(*cfg.count) + "|" + std::to_string(*cfg.seed);
  if (const auto violations = validate_jacobi(g); !violations.empty()) {
    Outcome o{jacobi_failure(g, violations), kNegative};
    o.report["meta"] = meta("sample", hashed);
    return o;
  }
  json samples = json::array();
  std::size_t integrable = 0, agreement = 0;
  for (std::size_t i = 0; i < *cfg.count; ++i) {
    const std::uint64_t seed = *cfg.seed + i;
    const AlmostComplexStructure j = sample_acs(g, seed);
    const Subspace t = from_acs(j);
    const bool nij = nijenhuis_vanishes(j);
    const bool inv = involutive(g, t);
    const bool pl = involutive_plucker(g, t);
    const bool agree = nij == inv && inv == pl;
    integrable += nij && agree ? 1 : 0;
    agreement += agree ? 1 : 0;
    samples.push_back(json{{"index", i},
                           {"seed", seed},
                           {"J", io::to_json(j.matrix())},
                           {"nijenhuis_zero", nij},
                           {"involutive", inv},
                           {"plucker_involutive", pl},
                           {"agree", agree}});
  }
  json report{{"dim", g.dim()},
              {"count", *cfg.count},
              {"seed", *cfg.seed},
              {"samples", samples},
              {"summary", json{{"count", *cfg.count}, {"integrable", integrable}, {"agreement", agreement}}},
              {"meta", meta("sample", hashed)}};
  return {report, kOk};
}

Outcome cmd_path(const RunConfig& cfg) {
  if (cfg.family.empty()) throw UsageError("path needs --family");
  std::string hashed = "path|" + cfg.family;
  const ParamFamily& family = find_family(cfg.family);
  const auto values = load_params(cfg.params_path, hashed);
  if (!cfg.algebra_path.empty()) {
    const LieAlgebra g = load_algebra(cfg.algebra_path, hashed);
    LieAlgebra expected;
    try {
      expected = family.algebra(values.front());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!(g == expected)) throw UsageError("--algebra does not match the algebra of family " + family.name);
  }
  std::vector<PathTarget> targets;
  for (const auto& text : cfg.targets) {
    hashed += "|" + text;
    targets.push_back(parse_target(text));
  }
  json report = io::to_json(path_classify(family, values, targets, cfg.tolerance));
  report["meta"] = meta("path", hashed);
  return {report, kOk};
}

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 5) + 1;
  return Rational(num, den);
}

Outcome cmd_stratify(const RunConfig& cfg) {
  std::string hashed = "stratify";
  const LieAlgebra g = load_algebra(cfg.algebra_path, hashed);
  if (const auto violations = validate_jacobi(g); !violations.empty()) {
    Outcome o{jacobi_failure(g, violations), kNegative};
    o.report["meta"] = meta("stratify", hashed);
    return o;
  }
  if (g.dim() % 2 != 0) throw Error(Errc::DimensionMismatch, "odd-dimensional algebra");
  const std::size_t n = g.dim() / 2;
  std::vector<std::pair<std::string, Subspace>> items;
  for (const auto& path : cfg.subspace_paths) {
    const std::string text = io::read_file(path);
    hashed += length_prefixed(text);
    items.emplace_back(path, io::subspace_from_json(io::parse_json(text)));
  }
  if (!cfg.family.empty()) {
    const ParamFamily& family = find_family(cfg.family);
    hashed += "|" + cfg.family;
    for (const auto& params : load_params(cfg.params_path, hashed)) {
      std::string label = family.name + "(";
      for (std::size_t i = 0; i < params.size(); ++i) label += (i ? "," : "") + params[i].to_string();
      items.emplace_back(label + ")", evaluate_family(family, params));
    }
  }
  if (cfg.count) {
    if (!cfg.seed) throw UsageError("random stratify samples need --seed");
    hashed += "|" + std::to_string(*cfg.count) + "|" + std::to_string(*cfg.seed);
    std::mt19937_64 rng(*cfg.seed);
    for (std::size_t s = 0; s < *cfg.count; ++s) {
      Matrix rows(n, g.dim());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < g.dim(); ++c) {
          Rational re = random_rational(rng);
          rows(r, c) = GaussScalar(std::move(re), random_rational(rng));
        }
      }
      items.emplace_back("random#" + std::to_string(s), span(rows, g.dim()));
    }
  }
  if (items.empty()) throw UsageError("stratify needs --subspace files, --family/--params, or --count/--seed");
  json list = json::array();
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& [label, t] : items) {
    if (t.ambient_dim() != g.dim() || t.dim() != n) {
      list.push_back(json{{"source", label}, {"error", "not an n-plane of the complexified algebra"}});
      continue;
    }
    const std::size_t k = stratum(g, t);
    ++histogram[k];
    list.push_back(json{{"source", label}, {"k", k}, {"in_V", involutive(g, t)}});
  }
  json hist = json::object();
  for (const auto& [k, c] : histogram) hist[std::to_string(k)] = c;
  return {json{{"n", n}, {"items", list}, {"histogram", hist}, {"meta", meta("stratify", hashed)}}, kOk};
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else if (value.is_array()) {
      char line[160];
      std::snprintf(line, sizeof line, "%-32s [%zu items]\n", name.c_str(), value.size());
      out << line;
    } else {
      const std::string v = value.is_string() ? value.get<std::string>() : value.dump();
      char line[64];
      std::snprintf(line, sizeof line, "%-32s ", name.c_str());
      out << line << v << '\n';
    }
  }
}

int emit(const RunConfig& cfg, const Outcome& o, std::ostream& out, std::ostream& err) {
  std::ostringstream body;
  if (cfg.format == "text") {
    flatten(o.report, "", body);
  } else {
    body << o.report.dump(2) << '\n';
  }
  if (cfg.out_path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kUsage;
    }
    f << body.str();
  }
  return o.code;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::UnknownFamily:
    case Errc::NotInV:
      return kNegative;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Left-invariant complex structures and transversely CR foliations over Lie algebras", "lics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("lics ") + LICS_VERSION);

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out_path, "Write the report to FILE instead of stdout");
    sub->add_option("--tolerance", cfg.tolerance, "Distance threshold for path convergence")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check the Jacobi identity of an algebra file");
  validate->add_option("--algebra", cfg.algebra_path, "Lie algebra JSON")->required();
  add_common(validate);

  auto* classify = app.add_subcommand("classify", "Classify a subspace of the complexified algebra");
  classify->add_option("--algebra", cfg.algebra_path, "Lie algebra JSON")->required();
  classify->add_option("--subspace", cfg.subspace_paths, "Subspace JSON")->required();
  add_common(classify);

  auto* catalog = app.add_subcommand("catalog", "List the built-in parameter families");
  add_common(catalog);

  auto* sample = app.add_subcommand("sample", "Sample almost complex structures and compare integrability oracles");
  sample->add_option("--algebra", cfg.algebra_path, "Lie algebra JSON")->required();
  sample->add_option("--count", cfg.count, "Number of samples");
  sample->add_option("--seed", cfg.seed, "Base seed");
  add_common(sample);

  auto* path = app.add_subcommand("path", "Classify a catalog family along a parameter path");
  path->add_option("--algebra", cfg.algebra_path, "Lie algebra JSON (checked against the family)");
  path->add_option("--family", cfg.family, "Catalog family name")->required();
  path->add_option("--params", cfg.params_path, "Parameter list JSON")->required();
  path->add_option("--target", cfg.targets, "Declared limit point NAME(PARAM,...)");
  add_common(path);

  auto* stratify = app.add_subcommand("stratify", "Histogram of k = dim(T ∩ conj T)");
  stratify->add_option("--algebra", cfg.algebra_path, "Lie algebra JSON")->required();
  stratify->add_option("--subspace", cfg.subspace_paths, "Subspace JSON files");
  stratify->add_option("--family", cfg.family, "Catalog family for a parameter grid");
  stratify->add_option("--params", cfg.params_path, "Parameter list JSON for --family");
  stratify->add_option("--count", cfg.count, "Number of random planes");
  stratify->add_option("--seed", cfg.seed, "Seed for random planes");
  add_common(stratify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kUsage;
  }

  Outcome outcome;
  try {
    if (*validate) {
      outcome = cmd_validate(cfg);
    } else if (*classify) {
      outcome = cmd_classify(cfg);
    } else if (*catalog) {
      outcome = cmd_catalog(cfg);
    } else if (*sample) {
      outcome = cmd_sample(cfg);
    } else if (*path) {
      outcome = cmd_path(cfg);
    } else if (*stratify) {
      outcome = cmd_stratify(cfg);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return emit(cfg, outcome, out, err);
}

}  // namespace lics::cli
