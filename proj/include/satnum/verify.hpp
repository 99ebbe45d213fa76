#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "satnum/generate.hpp"
#include "satnum/io.hpp"
#include "satnum/powers.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

enum class Family {
  irreducible,
  stable,
  two_var,
  m_primary,
  equigenerated_m_primary,
  general,
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::irreducible: return "irreducible";
    case Family::stable: return "stable";
    case Family::two_var: return "two_var";
    case Family::m_primary: return "m_primary";
    case Family::equigenerated_m_primary: return "equigenerated_m_primary";
    case Family::general: return "general";
  }
  throw std::logic_error("unknown family");
}

inline Family family_from_name(const std::string& name) {
  for (Family f : {Family::irreducible, Family::stable, Family::two_var,
                   Family::m_primary, Family::equigenerated_m_primary,
                   Family::general})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

/// Randomized formula-vs-oracle verification configuration. Identical configs
/// produce identical instance streams and identical reports.
struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 100;
  std::size_t n_max = 4;
  Exponent exp_max = 5;
  std::size_t gens_max = 5;
  long k_max = 3;
  Family family = Family::general;

  void validate() const {
    if (instances == 0 || n_max < 2 || exp_max < 1 || gens_max < 1 || k_max < 1)
      throw std::invalid_argument("verify bounds must be positive (and n_max >= 2)");
  }
};

struct InstanceResult {
  std::string repro;
  bool ok = true;
  bool tracks_equality = false;
  bool equality = false;
  std::string detail;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<InstanceResult> instances;
  std::size_t failures = 0;
  std::size_t equality_hits = 0;
  std::size_t equality_total = 0;
  bool ok = true;
};

namespace detail {

inline void require(InstanceResult& res, bool condition, const std::string& what) {
  if (!condition) {
    res.ok = false;
    if (!res.detail.empty()) res.detail += "; ";
    res.detail += what;
  }
}

inline std::string repro_string(Family family, std::size_t index,
                                const MonomialIdeal& ideal, long k) {
  std::ostringstream os;
  os << "family=" << family_name(family) << " instance=" << index
     << " ideal=\"" << format_ideal_text(ideal) << "\" k=" << k;
  return os.str();
}

inline void check_irreducible(Rng& rng, const VerifyConfig& cfg, std::size_t index,
                              InstanceResult& res) {
  IrreducibleComponent q = random_irreducible(rng, cfg.n_max, cfg.exp_max);
  long k = static_cast<long>(rng.range(1, cfg.k_max));
  MonomialIdeal qk = power(q.to_ideal(), k);
  res.repro = repro_string(cfg.family, index, q.to_ideal(), k);
  Exponent formula = sat_irreducible_power(q, k);
  auto oracle = static_cast<Exponent>(saturation_chain(qk).sat);
  require(res, formula == oracle, "sat formula mismatch");
  for (int probe = 0; probe < 4; ++probe) {
    Monomial u = random_monomial(rng, q.dimension(),
                                 checked_mul(cfg.exp_max, cfg.k_max));
    require(res, membership_in_irreducible_power(q, k, u) == qk.contains(u),
            "membership criterion mismatch");
  }
}

inline void check_stable(Rng& rng, const VerifyConfig& cfg, std::size_t index,
                         InstanceResult& res) {
  MonomialIdeal ideal = random_stable(rng, cfg.n_max, cfg.exp_max, rng.chance(1, 2));
  res.repro = repro_string(cfg.family, index, ideal, 1);
  auto oracle = static_cast<Exponent>(saturation_chain(ideal).sat);
  require(res, sat_stable(ideal) == oracle, "stable sat formula mismatch");
  MonomialIdeal max_ideal = MonomialIdeal::maximal(ideal.dimension());
  for (long k = 0; k <= cfg.k_max; ++k)
    require(res, colon_stable_fast(ideal, k) == colon(ideal, power(max_ideal, k)),
            "fast colon mismatch at k=" + std::to_string(k));
}

inline void check_two_var(Rng& rng, const VerifyConfig& cfg, std::size_t index,
                          InstanceResult& res) {
  MonomialIdeal ideal = random_two_var(rng, cfg.gens_max, cfg.exp_max);
  res.repro = repro_string(cfg.family, index, ideal, 1);
  auto oracle = static_cast<Exponent>(saturation_chain(ideal).sat);
  require(res, sat_two_vars(ideal) == oracle, "two-variable formula mismatch");
  Decomposition dec = irreducible_decomposition(ideal);
  MonomialIdeal back = MonomialIdeal::unit(2);
  for (const IrreducibleComponent& q : dec.components)
    back = intersect(back, q.to_ideal());
  require(res, back == ideal, "decomposition does not re-intersect to the ideal");
}

inline void check_m_primary(Rng& rng, const VerifyConfig& cfg, std::size_t index,
                            InstanceResult& res, bool equigenerated) {
  MonomialIdeal ideal =
      equigenerated
          ? random_equigenerated_m_primary(rng, cfg.n_max, cfg.exp_max, cfg.gens_max)
          : random_m_primary(rng, cfg.n_max, cfg.exp_max, cfg.gens_max);
  long k = static_cast<long>(rng.range(1, cfg.k_max));
  res.repro = repro_string(cfg.family, index, ideal, k);
  require(res, is_m_primary(ideal), "generator construction is not m-primary");
  auto oracle = static_cast<Exponent>(saturation_chain(ideal).sat);
  require(res, sat_upper_bound(ideal) == oracle,
          "component bound must equal sat for m-primary ideals");
  PowerComparison cmp = compare_powers(ideal, k);
  require(res, cmp.ordinary_in_bracket, "ordinary power not inside bracket power");
  require(res, cmp.sat_bracket == cmp.sat_bound_bracket,
          "bracket sat must equal the component bound for m-primary ideals");
  require(res, cmp.sat_bracket <= cmp.sat_ordinary,
          "bracket sat must not exceed ordinary sat");
  res.tracks_equality = true;
  res.equality = cmp.sat_bracket == cmp.sat_ordinary;
}

inline void check_general(Rng& rng, const VerifyConfig& cfg, std::size_t index,
                          InstanceResult& res) {
  MonomialIdeal ideal = random_general(rng, cfg.n_max, cfg.exp_max, cfg.gens_max);
  long k = static_cast<long>(rng.range(1, cfg.k_max));
  res.repro = repro_string(cfg.family, index, ideal, k);
  auto oracle = static_cast<Exponent>(saturation_chain(ideal).sat);
  Exponent bound = sat_upper_bound(ideal);
  require(res, oracle <= bound, "component bound violated");
  if (is_m_primary(ideal))
    require(res, oracle == bound, "bound attained on m-primary ideals");
  else if (bound > 0)
    require(res, oracle < bound, "bound strict off m-primary ideals");
  PowerComparison cmp = compare_powers(ideal, k);
  require(res, cmp.ordinary_in_bracket, "ordinary power not inside bracket power");
  require(res, cmp.sat_bracket <= cmp.sat_bound_bracket,
          "bracket sat exceeds the component bound");
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyConfig& config) {
  config.validate();
  Rng rng(config.seed);
  VerifyReport report;
  report.config = config;
  for (std::size_t i = 0; i < config.instances; ++i) {
    InstanceResult res;
    switch (config.family) {
      case Family::irreducible:
        detail::check_irreducible(rng, config, i, res);
        break;
      case Family::stable:
        detail::check_stable(rng, config, i, res);
        break;
      case Family::two_var:
        detail::check_two_var(rng, config, i, res);
        break;
      case Family::m_primary:
        detail::check_m_primary(rng, config, i, res, false);
        break;
      case Family::equigenerated_m_primary:
        detail::check_m_primary(rng, config, i, res, true);
        break;
      case Family::general:
        detail::check_general(rng, config, i, res);
        break;
    }
    if (!res.ok) ++report.failures;
    if (res.tracks_equality) {
      ++report.equality_total;
      if (res.equality) ++report.equality_hits;
    }
    report.instances.push_back(std::move(res));
  }
  report.ok = report.failures == 0;
  return report;
}

inline nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json instances = nlohmann::json::array();
  for (const InstanceResult& res : report.instances) {
    nlohmann::json j{{"repro", res.repro}, {"ok", res.ok}};
    if (res.tracks_equality) j["equality"] = res.equality;
    if (!res.detail.empty()) j["detail"] = res.detail;
    instances.push_back(std::move(j));
  }
  nlohmann::json j{
      {"family", family_name(report.config.family)},
      {"seed", report.config.seed},
      {"instances", report.config.instances},
      {"n_max", report.config.n_max},
      {"exp_max", report.config.exp_max},
      {"gens_max", report.config.gens_max},
      {"k_max", report.config.k_max},
      {"failures", report.failures},
      {"ok", report.ok},
      {"results", std::move(instances)},
  };
  if (report.equality_total > 0) {
    j["equality_hits"] = report.equality_hits;
    j["equality_total"] = report.equality_total;
  }
  return j;
}

inline std::string render_verify_text(const VerifyReport& report, bool quiet) {
  std::ostringstream os;
  os << "family " << family_name(report.config.family) << ", seed "
     << report.config.seed << ", " << report.config.instances << " instances\n";
  if (!quiet)
    for (const InstanceResult& res : report.instances) {
      os << (res.ok ? "ok   " : "FAIL ") << res.repro;
      if (!res.detail.empty()) os << " [" << res.detail << "]";
      os << "\n";
    }
  os << "failures: " << report.failures << "/" << report.config.instances << "\n";
  if (report.equality_total > 0)
    os << "sat(I^{k}) = sat(I^k) on " << report.equality_hits << "/"
       << report.equality_total << " instances (reported, not asserted)\n";
  os << (report.ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return os.str();
}

}  // namespace satnum
