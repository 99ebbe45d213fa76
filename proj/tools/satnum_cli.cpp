// Command-line front end: saturation numbers, decompositions, powers and the
// randomized formula-vs-oracle verifier for monomial ideals.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "satnum/decomposition.hpp"
#include "satnum/generate.hpp"
#include "satnum/io.hpp"
#include "satnum/powers.hpp"
#include "satnum/saturation.hpp"
#include "satnum/stability.hpp"
#include "satnum/verify.hpp"

namespace {

using nlohmann::json;
using namespace satnum;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MonomialIdeal load(const std::string& path, bool quiet) {
  bool reduced = false;
  IdealDocument doc = load_ideal(read_file(path), &reduced);
  if (reduced && !quiet)
    std::cerr << "warning: generators were not minimal; reduced on load\n";
  return doc.to_ideal();
}

json ideal_json(const MonomialIdeal& ideal) {
  return to_json(IdealDocument::from_ideal(ideal));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_sat(const std::string& path, bool as_json, bool quiet, bool with_chain) {
  MonomialIdeal ideal = load(path, quiet);
  SaturationReport report = saturation_chain(ideal);
  if (as_json) {
    json j{{"sat", report.sat}, {"saturation", ideal_json(report.saturation)}};
    if (with_chain && !quiet) {
      json chain = json::array();
      for (const MonomialIdeal& step : report.chain) chain.push_back(ideal_json(step));
      j["chain"] = std::move(chain);
    }
    emit(j);
  } else {
    std::cout << "sat = " << report.sat << "\n";
    std::cout << "saturation = " << format_ideal(report.saturation) << "\n";
    if (with_chain && !quiet)
      for (std::size_t i = 0; i < report.chain.size(); ++i)
        std::cout << "I : m^" << i << " = " << format_ideal(report.chain[i]) << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const std::string& path, bool as_json, bool quiet) {
  MonomialIdeal ideal = load(path, quiet);
  Decomposition dec = irreducible_decomposition(ideal);
  auto primes = minimal_primes(ideal);
  bool primary = is_m_primary(ideal);
  if (as_json) {
    json comps = json::array();
    for (const IrreducibleComponent& q : dec.components)
      comps.push_back(ideal_json(q.to_ideal()));
    json min = json::array();
    for (const auto& p : primes) min.push_back(std::vector<std::size_t>(p.begin(), p.end()));
    emit(json{{"components", std::move(comps)},
              {"irredundant", dec.irredundant},
              {"minimal_primes", std::move(min)},
              {"m_primary", primary}});
  } else {
    for (const IrreducibleComponent& q : dec.components)
      std::cout << format_ideal(q.to_ideal()) << "\n";
    std::cout << "components: " << dec.components.size() << " (irredundant)\n";
    std::cout << "minimal primes:";
    for (const auto& p : primes) {
      std::cout << " {";
      bool first = true;
      for (std::size_t var : p) {
        if (!first) std::cout << ",";
        std::cout << "x" << var;
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "m-primary: " << (primary ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_power(const std::string& path, long k, bool as_json, bool quiet) {
  MonomialIdeal result = power(load(path, quiet), k);
  if (as_json)
    emit(ideal_json(result));
  else
    std::cout << format_ideal(result) << "\n";
  return kExitOk;
}

int cmd_symbolic(const std::string& path, long k, const std::string& kind,
                 bool as_json, bool quiet) {
  MonomialIdeal ideal = load(path, quiet);
  MonomialIdeal result = kind == "bracket" ? bracket_symbolic_power(ideal, k)
                                           : symbolic_power_min(ideal, k);
  if (as_json)
    emit(ideal_json(result));
  else
    std::cout << format_ideal(result) << "\n";
  return kExitOk;
}

int cmd_stability(const std::string& path, bool as_json, bool quiet) {
  MonomialIdeal ideal = load(path, quiet);
  StabilityClass cls = stability_class(ideal);
  std::string name = cls == StabilityClass::strongly_stable ? "strongly_stable"
                     : cls == StabilityClass::stable        ? "stable"
                                                            : "not_stable";
  if (as_json)
    emit(json{{"class", name}});
  else
    std::cout << name << "\n";
  return kExitOk;
}

int cmd_closure(const std::string& path, bool strong, bool as_json, bool quiet) {
  MonomialIdeal seeds = load(path, quiet);
  MonomialIdeal result = stable_closure(seeds.generators(), strong);
  if (as_json)
    emit(ideal_json(result));
  else
    std::cout << format_ideal(result) << "\n";
  return kExitOk;
}

int cmd_compare(const std::string& path, long k, bool as_json, bool quiet) {
  MonomialIdeal ideal = load(path, quiet);
  PowerComparison cmp = compare_powers(ideal, k);
  if (as_json) {
    emit(json{{"k", k},
              {"ordinary_in_bracket", cmp.ordinary_in_bracket},
              {"sat_ordinary", cmp.sat_ordinary},
              {"sat_bracket", cmp.sat_bracket},
              {"sat_bound_bracket", cmp.sat_bound_bracket},
              {"m_primary", cmp.m_primary}});
  } else {
    std::cout << "I^k in I^{k}: " << (cmp.ordinary_in_bracket ? "yes" : "no") << "\n";
    std::cout << "sat(I^k)   = " << cmp.sat_ordinary << "\n";
    std::cout << "sat(I^{k}) = " << cmp.sat_bracket << "\n";
    std::cout << "max sat(q_i^k) = " << cmp.sat_bound_bracket << "\n";
    std::cout << "m-primary: " << (cmp.m_primary ? "yes" : "no") << "\n";
  }
  bool ok = cmp.ordinary_in_bracket && cmp.sat_bracket <= cmp.sat_bound_bracket &&
            (!cmp.m_primary || (cmp.sat_bracket == cmp.sat_bound_bracket &&
                                cmp.sat_bracket <= cmp.sat_ordinary));
  return ok ? kExitOk : kExitAssertionFailure;
}

int cmd_verify(const VerifyConfig& config, bool as_json, bool quiet) {
  VerifyReport report = run_verify(config);
  if (as_json)
    emit(to_json(report));
  else
    std::cout << render_verify_text(report, quiet);
  return report.ok ? kExitOk : kExitAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saturation numbers and decompositions of monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool quiet = false;
  app.add_flag("--json", as_json, "structured JSON output");
  app.add_flag("--quiet", quiet, "suppress chains and per-instance lines");

  std::string file;
  long k = 1;
  std::string kind = "min";
  bool with_chain = false;
  bool strong = false;

  auto* sat = app.add_subcommand("sat", "saturation number and saturation");
  sat->add_option("file", file)->required();
  sat->add_flag("--chain", with_chain, "print the colon chain");

  auto* decompose = app.add_subcommand("decompose", "irredundant irreducible decomposition");
  decompose->add_option("file", file)->required();

  auto* pow_cmd = app.add_subcommand("power", "ordinary power I^k");
  pow_cmd->add_option("file", file)->required();
  pow_cmd->add_option("-k", k, "exponent")->required();

  auto* symbolic = app.add_subcommand("symbolic", "symbolic power");
  symbolic->add_option("file", file)->required();
  symbolic->add_option("-k", k, "exponent")->required();
  symbolic->add_option("--kind", kind, "min | bracket")
      ->check(CLI::IsMember({"min", "bracket"}));

  auto* stability = app.add_subcommand("stability", "stable / strongly stable classification");
  stability->add_option("file", file)->required();

  auto* closure = app.add_subcommand("closure", "smallest (strongly) stable ideal containing the generators");
  closure->add_option("file", file)->required();
  closure->add_flag("--strong", strong, "strongly stable closure");

  auto* compare = app.add_subcommand("compare", "ordinary vs bracket symbolic power report");
  compare->add_option("file", file)->required();
  compare->add_option("-k", k, "exponent")->required();

  VerifyConfig config;
  std::string family = "general";
  auto* verify = app.add_subcommand("verify", "randomized formula-vs-oracle harness");
  verify->add_option("--family", family, "instance family")
      ->check(CLI::IsMember({"irreducible", "stable", "two_var", "m_primary",
                             "equigenerated_m_primary", "general"}));
  verify->add_option("--seed", config.seed, "RNG seed");
  verify->add_option("--instances", config.instances, "instance count");
  verify->add_option("--n-max", config.n_max, "max ambient dimension");
  verify->add_option("--exp-max", config.exp_max, "max exponent");
  verify->add_option("--gens-max", config.gens_max, "max generator count");
  verify->add_option("--k-max", config.k_max, "max power");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sat) return cmd_sat(file, as_json, quiet, with_chain);
    if (*decompose) return cmd_decompose(file, as_json, quiet);
    if (*pow_cmd) return cmd_power(file, k, as_json, quiet);
    if (*symbolic) return cmd_symbolic(file, k, kind, as_json, quiet);
    if (*stability) return cmd_stability(file, as_json, quiet);
    if (*closure) return cmd_closure(file, strong, as_json, quiet);
    if (*compare) return cmd_compare(file, k, as_json, quiet);
    if (*verify) {
      config.family = family_from_name(family);
      return cmd_verify(config, as_json, quiet);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
