#pragma once

#include <stdexcept>
#include <vector>

#include "satnum/decomposition.hpp"
#include "satnum/ideal.hpp"
#include "satnum/stability.hpp"

namespace satnum {

/// The chain I, I:m, I:m^2, ... up to and including the first repeated term.
struct SaturationReport {
  std::vector<MonomialIdeal> chain;
  std::size_t sat = 0;
  MonomialIdeal saturation;
};

/// Brute-force saturation oracle: iterate the colon by the maximal ideal until
/// stabilization. Minimal generators are recomputed from scratch at each step.
inline SaturationReport saturation_chain(const MonomialIdeal& ideal) {
  MonomialIdeal max_ideal = MonomialIdeal::maximal(ideal.dimension());
  SaturationReport report{{ideal}, 0, ideal};
  for (;;) {
    const MonomialIdeal& current = report.chain.back();
    MonomialIdeal next =
        current.is_zero() ? current : colon(current, max_ideal);
    bool stable = next == current;
    report.chain.push_back(std::move(next));
    if (stable) break;
  }
  report.sat = report.chain.size() - 2;
  report.saturation = report.chain.back();
  return report;
}

/// Closed form for sat(q^k) of an irreducible ideal q: with full support the
/// value is k*a_max + (sum of the other exponents) - n + 1; otherwise the
/// quotient has positive depth and the power is already saturated.
inline Exponent sat_irreducible_power(const IrreducibleComponent& q, long k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (!q.full_support()) return 0;
  Exponent max_exp = 0;
  for (const auto& [var, e] : q.powers()) max_exp = std::max(max_exp, e);
  Exponent t = checked_mul(static_cast<Exponent>(k), max_exp);
  bool max_used = false;
  for (const auto& [var, e] : q.powers()) {
    if (!max_used && e == max_exp) {
      max_used = true;
      continue;
    }
    t = checked_add(t, e);
  }
  return t - static_cast<Exponent>(q.dimension()) + 1;
}

/// u lies in q^k iff the floors b_i/a_i over the support of q sum to at
/// least k.
inline bool membership_in_irreducible_power(const IrreducibleComponent& q, long k,
                                            const Monomial& u) {
  if (k < 0) throw std::invalid_argument("negative power");
  if (u.size() != q.dimension())
    throw std::invalid_argument("monomial dimension mismatch");
  if (k == 0) return true;
  Exponent total = 0;
  for (const auto& [var, e] : q.powers()) {
    total = checked_add(total, u[var - 1] / e);
    if (total >= k) return true;
  }
  return false;
}

/// sat of a stable ideal: the largest x_n-exponent among minimal generators.
inline Exponent sat_stable(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("stable saturation formula requires a proper non-zero ideal");
  if (stability_class(ideal) == StabilityClass::not_stable)
    throw std::domain_error("ideal is not stable");
  Exponent s = 0;
  for (const Monomial& u : ideal.generators())
    s = std::max(s, u[ideal.dimension() - 1]);
  return s;
}

/// For stable I, I : m^k = I : x_n^k, computed generator by generator.
inline MonomialIdeal colon_stable_fast(const MonomialIdeal& ideal, long k) {
  if (k < 0) throw std::invalid_argument("negative colon power");
  if (!ideal.is_zero() && stability_class(ideal) == StabilityClass::not_stable)
    throw std::domain_error("ideal is not stable");
  Monomial xnk = Monomial::variable(ideal.dimension(), ideal.dimension(),
                                    static_cast<Exponent>(k));
  return colon(ideal, xnk);
}

/// Two-variable closed form: with the generator table (a_i, b_i) sorted so a
/// decreases, sat(I) = max{a_i + b_{i+1}} - a_m - b_1 - 1. A principal ideal
/// is already saturated.
inline Exponent sat_two_vars(const MonomialIdeal& ideal) {
  std::vector<std::pair<Exponent, Exponent>> table = two_variable_form(ideal);
  if (table.size() == 1) return 0;
  Exponent s = 0;
  for (std::size_t i = 0; i + 1 < table.size(); ++i)
    s = std::max(s, checked_add(table[i].first, table[i + 1].second));
  return s - table.back().first - table.front().second - 1;
}

/// Upper bound max{sat(q_i)} over the irredundant irreducible decomposition;
/// attained exactly when the ideal is m-primary.
inline Exponent sat_upper_bound(const MonomialIdeal& ideal) {
  Decomposition dec = irreducible_decomposition(ideal);
  Exponent bound = 0;
  for (const IrreducibleComponent& q : dec.components)
    bound = std::max(bound, sat_irreducible_power(q, 1));
  return bound;
}

}  // namespace satnum
