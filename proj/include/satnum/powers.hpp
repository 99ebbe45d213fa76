#pragma once

#include <stdexcept>

#include "satnum/decomposition.hpp"
#include "satnum/ideal.hpp"
#include "satnum/saturation.hpp"

namespace satnum {

/// Symbolic power I^(k): intersection of the k-th powers of the primary
/// components whose radical is a minimal prime.
inline MonomialIdeal symbolic_power_min(const MonomialIdeal& ideal, long k) {
  if (k < 1) throw std::invalid_argument("symbolic power requires k >= 1");
  auto primaries = primary_decomposition(ideal);
  auto min_primes = minimal_primes(ideal);
  MonomialIdeal result = MonomialIdeal::unit(ideal.dimension());
  for (const auto& [support, component] : primaries)
    if (min_primes.contains(support))
      result = intersect(result, power(component, k));
  return result;
}

/// Bracket symbolic power I^{k}: intersection of the k-th powers of all
/// components of the irredundant irreducible decomposition.
inline MonomialIdeal bracket_symbolic_power(const MonomialIdeal& ideal, long k) {
  if (k < 1) throw std::invalid_argument("symbolic power requires k >= 1");
  Decomposition dec = irreducible_decomposition(ideal);
  MonomialIdeal result = MonomialIdeal::unit(ideal.dimension());
  for (const IrreducibleComponent& q : dec.components)
    result = intersect(result, power(q.to_ideal(), k));
  return result;
}

/// Side-by-side report on the ordinary power I^k versus the bracket symbolic
/// power, with the component-wise saturation bound.
struct PowerComparison {
  bool ordinary_in_bracket = false;
  Exponent sat_ordinary = 0;
  Exponent sat_bracket = 0;
  Exponent sat_bound_bracket = 0;
  bool m_primary = false;
};

inline PowerComparison compare_powers(const MonomialIdeal& ideal, long k) {
  if (k < 1) throw std::invalid_argument("power comparison requires k >= 1");
  Decomposition dec = irreducible_decomposition(ideal);
  MonomialIdeal ordinary = power(ideal, k);
  MonomialIdeal bracket = MonomialIdeal::unit(ideal.dimension());
  Exponent bound = 0;
  for (const IrreducibleComponent& q : dec.components) {
    bracket = intersect(bracket, power(q.to_ideal(), k));
    bound = std::max(bound, sat_irreducible_power(q, k));
  }
  PowerComparison report;
  report.ordinary_in_bracket = bracket.contains_ideal(ordinary);
  report.sat_ordinary = static_cast<Exponent>(saturation_chain(ordinary).sat);
  report.sat_bracket = static_cast<Exponent>(saturation_chain(bracket).sat);
  report.sat_bound_bracket = bound;
  report.m_primary = is_m_primary(ideal);
  return report;
}

}  // namespace satnum
