// Command-line front end: evaluate R-words, decompose c-commutators in the
// basis of D, and run the randomized property suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nil2/checks.hpp"
#include "nil2/error.hpp"
#include "nil2/rword.hpp"
#include "nil2/scalar_parser.hpp"

namespace {

using namespace nil2;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;
constexpr int kFactorBound = 3;

struct Options {
  std::string ring = "Q[t]";
  std::string group = "free2:2";
  std::string strategy = "auto";
  std::string s_basis = "std";
  std::string format = "text";
  int factor_degree_bound = kDefaultFactorDegreeBound;
  std::uint64_t seed = 1;
  long cases = 100;
  unsigned workers = 0;
};

SchemaPtr load_group(const std::string& source) {
  if (auto colon = source.find(':'); colon != std::string::npos) {
    const std::string name = source.substr(0, colon);
    int rank = 0;
    try {
      rank = std::stoi(source.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownPreset, "bad rank in group preset '" + source + "'");
    }
    return schema_preset(name, rank);
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::InvalidSchema, "cannot read schema file '" + source + "'");
  std::stringstream text;
  text << in.rdbuf();
  return schema_from_json(text.str());
}

CReductionStrategy make_strategy(const Options& o) {
  const auto ring = parse_ring_name(o.ring);
  if (!ring) throw Error(ErrorKind::ScalarNotInRing, "unknown ring '" + o.ring + "'");
  SchemaPtr schema = load_group(o.group);
  CReductionStrategy s = o.strategy == "formal"
                             ? CReductionStrategy::make(StrategyKind::FormalGeneric, schema, *ring, o.factor_degree_bound)
                             : CReductionStrategy::automatic(schema, *ring, o.factor_degree_bound);
  s.s_basis = o.s_basis == "paper" ? SBasisMode::Paper : SBasisMode::Std;
  return s;
}

GeneratorNames names_of(const GroupSchema& schema) {
  GeneratorNames names;
  for (int i = 1; i <= schema.m(); ++i) names.push_back(schema.u_name(i));
  return names;
}

json d_json(const DVector& d, const GeneratorNames& names) {
  json out = json::array();
  for (const auto& [key, c] : d.terms()) out.push_back({{"key", key_to_string(key, names)}, {"coeff", c.to_string()}});
  return out;
}

int cmd_eval(const Options& o, const std::string& expression) {
  const CReductionStrategy s = make_strategy(o);
  const TensorElement g = eval(parse_word(expression, *s.schema, s.ring), s);
  if (o.format == "json") {
    json a = json::array(), b = json::array();
    for (const auto& x : g.hall.a) a.push_back(x.to_string());
    for (const auto& x : g.hall.b) b.push_back(x.to_string());
    json out = {{"input", expression},
                {"hall", {{"a", a}, {"b", b}}},
                {"d", d_json(g.d, names_of(*s.schema))},
                {"normal_form", print_normal_form(g)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << print_normal_form(g) << "\n";
  }
  return kOk;
}

int cmd_basis(const Options& o, const std::string& alpha, const std::string& beta, const std::string& lambda) {
  const CReductionStrategy s = make_strategy(o);
  const DVector d = ccoord(s, parse_scalar(alpha, s.ring), parse_scalar(beta, s.ring), parse_scalar(lambda, s.ring));
  const GeneratorNames names = names_of(*s.schema);
  if (o.format == "json") {
    json out = {{"alpha", alpha}, {"beta", beta}, {"lambda", lambda}, {"d", d_json(d, names)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(d, names) << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o, const std::string& suite) {
  RunConfig config{make_strategy(o), o.seed, o.cases, o.workers};
  const auto reports = run_suite(suite, config);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.failed == 0;
  if (o.format == "json") {
    json out = json::array();
    for (const auto& r : reports)
      out.push_back({{"suite", r.suite},
                     {"property", r.name},
                     {"passed", r.passed},
                     {"failed", r.failed},
                     {"skipped", r.skipped},
                     {"counterexample", r.counterexample}});
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "seed " << o.seed << ", " << o.cases << " cases, ring " << o.ring << ", group " << o.group << "\n"
              << format_report(reports) << (ok ? "all properties hold\n" : "FAILURES\n");
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in tensor completions of 2-nilpotent groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring", o.ring, "Coefficient ring: Z, Q, Q[t] or Q(t)")->capture_default_str();
  app.add_option("--group", o.group, "Preset free2:<rank> or path to a schema JSON file")->capture_default_str();
  app.add_option("--strategy", o.strategy, "Reduction strategy")
      ->check(CLI::IsMember({"auto", "formal"}))
      ->capture_default_str();
  app.add_option("--factor-degree-bound", o.factor_degree_bound, "Largest irreducible factor degree allowed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--s-basis", o.s_basis, "Additive basis of Q(t)")
      ->check(CLI::IsMember({"std", "paper"}))
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string expression, alpha, beta, lambda, suite = "all";
  auto* eval_cmd = app.add_subcommand("eval", "Print the normal form of an R-word");
  eval_cmd->add_option("expression", expression, "R-word, e.g. \"(x*y)^(t^2+1)\"")->required();
  auto* basis_cmd = app.add_subcommand("basis", "Decompose c(x^alpha, y^beta)_lambda in the basis of D");
  basis_cmd->add_option("alpha", alpha)->required();
  basis_cmd->add_option("beta", beta)->required();
  basis_cmd->add_option("lambda", lambda)->required();
  auto* check_cmd = app.add_subcommand("check", "Run randomized property suites");
  check_cmd->add_option("--suite", suite, "axioms, facts, hall-oracle, confluence or all")
      ->check(CLI::IsMember({"axioms", "facts", "hall-oracle", "confluence", "all"}))
      ->capture_default_str();
  check_cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  check_cmd->add_option("--cases", o.cases, "Cases per property")->check(CLI::NonNegativeNumber)->capture_default_str();
  check_cmd->add_option("--workers", o.workers, "Worker threads (0: one per core)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*eval_cmd) return cmd_eval(o, expression);
    if (*basis_cmd) return cmd_basis(o, alpha, beta, lambda);
    return cmd_check(o, suite);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::FactorDegreeExceeded ? kFactorBound : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
