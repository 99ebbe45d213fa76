#pragma once

#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "satnum/ideal.hpp"

namespace satnum {

/// m(u): the largest variable index dividing u; 0 for the unit monomial.
inline std::size_t m_index(const Monomial& u) { return u.max_var_index(); }

enum class StabilityClass { not_stable, stable, strongly_stable };

/// Classifies by checking the exchange condition on the minimal generators.
inline StabilityClass stability_class(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("stability of the zero ideal is undefined");
  bool stable = true;
  bool strongly = true;
  for (const Monomial& u : ideal.generators()) {
    std::size_t top = m_index(u);
    for (std::size_t j = 2; j <= top && (stable || strongly); ++j) {
      if (u[j - 1] == 0) continue;
      for (std::size_t i = 1; i < j; ++i) {
        Monomial moved = (u / Monomial::variable(ideal.dimension(), j)) *
                         Monomial::variable(ideal.dimension(), i);
        if (!ideal.contains(moved)) {
          strongly = false;
          if (j == top) stable = false;
        }
      }
    }
    if (!stable) break;
  }
  if (strongly) return StabilityClass::strongly_stable;
  return stable ? StabilityClass::stable : StabilityClass::not_stable;
}

/// Smallest stable (strong=false) or strongly stable (strong=true) ideal
/// containing the given monomials: breadth-first closure under the exchange
/// moves. Moves preserve total degree, so the frontier is finite.
inline MonomialIdeal stable_closure(const std::vector<Monomial>& monomials, bool strong) {
  if (monomials.empty()) throw std::invalid_argument("stable closure of an empty set");
  std::size_t n = monomials.front().size();
  for (const Monomial& u : monomials)
    if (u.size() != n) throw std::invalid_argument("monomial dimension mismatch");

  std::set<Monomial> visited(monomials.begin(), monomials.end());
  std::deque<Monomial> frontier(monomials.begin(), monomials.end());
  while (!frontier.empty()) {
    Monomial u = frontier.front();
    frontier.pop_front();
    std::size_t top = m_index(u);
    if (top <= 1) continue;
    for (std::size_t j = strong ? 2 : top; j <= top; ++j) {
      if (u[j - 1] == 0) continue;
      for (std::size_t i = 1; i < j; ++i) {
        Monomial moved =
            (u / Monomial::variable(n, j)) * Monomial::variable(n, i);
        if (visited.insert(moved).second) frontier.push_back(moved);
      }
    }
  }
  return MonomialIdeal(n, {visited.begin(), visited.end()});
}

}  // namespace satnum
