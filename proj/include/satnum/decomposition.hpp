#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satnum/ideal.hpp"

namespace satnum {

/// An irreducible monomial ideal (x_{i_1}^{a_1}, ..., x_{i_r}^{a_r}) given by
/// its support (1-based variable indices) and the positive exponents.
class IrreducibleComponent {
 public:
  IrreducibleComponent(std::size_t n, std::map<std::size_t, Exponent> powers)
      : n_(n), powers_(std::move(powers)) {
    if (powers_.empty()) throw std::invalid_argument("empty irreducible component");
    for (const auto& [var, e] : powers_) {
      if (var < 1 || var > n_) throw std::invalid_argument("variable index out of range");
      if (e <= 0) throw std::invalid_argument("component exponent must be positive");
    }
  }

  std::size_t dimension() const { return n_; }
  const std::map<std::size_t, Exponent>& powers() const { return powers_; }

  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto& [var, e] : powers_) s.insert(var);
    return s;
  }

  bool full_support() const { return powers_.size() == n_; }

  MonomialIdeal to_ideal() const {
    std::vector<Monomial> gens;
    for (const auto& [var, e] : powers_) gens.push_back(Monomial::variable(n_, var, e));
    return MonomialIdeal(n_, std::move(gens));
  }

  /// Membership in an irreducible ideal: u is in the component iff some
  /// supported variable of u reaches the component's exponent.
  bool contains(const Monomial& u) const {
    if (u.size() != n_) throw std::invalid_argument("monomial dimension mismatch");
    for (const auto& [var, e] : powers_)
      if (u[var - 1] >= e) return true;
    return false;
  }

  auto operator<=>(const IrreducibleComponent& other) const = default;

 private:
  std::size_t n_ = 0;
  std::map<std::size_t, Exponent> powers_;
};

struct Decomposition {
  std::vector<IrreducibleComponent> components;
  bool irredundant = false;
};

namespace detail {

inline void check_decomposable(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("cannot decompose the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("cannot decompose the unit ideal");
}

inline bool all_pure_powers(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.generators())
    if (g.max_var_index() == 0 ||
        g[g.max_var_index() - 1] != g.degree())
      return false;
  return true;
}

inline IrreducibleComponent component_of_pure_powers(const MonomialIdeal& ideal) {
  std::map<std::size_t, Exponent> powers;
  for (const Monomial& g : ideal.generators())
    powers[g.max_var_index()] = g[g.max_var_index() - 1];
  return IrreducibleComponent(ideal.dimension(), std::move(powers));
}

/// Generator-splitting recursion, memoized on the canonical generator set.
inline void split_components(const MonomialIdeal& ideal,
                             std::map<MonomialIdeal, std::set<IrreducibleComponent>>& memo,
                             std::set<IrreducibleComponent>& out) {
  if (auto it = memo.find(ideal); it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }
  std::set<IrreducibleComponent> local;
  if (all_pure_powers(ideal)) {
    local.insert(component_of_pure_powers(ideal));
  } else {
    // First generator in canonical order with at least two supported variables,
    // split on its lowest-index variable.
    const std::vector<Monomial>& gens = ideal.generators();
    std::size_t pivot = 0;
    while (gens[pivot].max_var_index() == 0 ||
           gens[pivot][gens[pivot].max_var_index() - 1] == gens[pivot].degree())
      ++pivot;
    const Monomial& u = gens[pivot];
    std::size_t var = 1;
    while (u[var - 1] == 0) ++var;
    Monomial pure = Monomial::variable(ideal.dimension(), var, u[var - 1]);
    Monomial rest = u / pure;
    for (const Monomial& replacement : {pure, rest}) {
      std::vector<Monomial> next = gens;
      next[pivot] = replacement;
      split_components(MonomialIdeal(ideal.dimension(), std::move(next)), memo, local);
    }
  }
  memo.emplace(ideal, local);
  out.insert(local.begin(), local.end());
}

/// Greedy irredundancy filter. A component q is redundant iff the intersection
/// of the remaining ones lies inside q; equivalently the maximal monomial
/// outside q (exponent a_v - 1 on supp(q), arbitrarily large elsewhere) fails
/// to lie in some other component.
inline std::vector<IrreducibleComponent> drop_redundant(
    std::vector<IrreducibleComponent> comps, std::size_t n) {
  Exponent big = 1;
  for (const auto& c : comps)
    for (const auto& [var, e] : c.powers()) big = std::max(big, e);

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps.size() == 1) break;
      std::vector<Exponent> witness(n, big);
      for (const auto& [var, e] : comps[i].powers()) witness[var - 1] = e - 1;
      Monomial w{witness};
      bool needed = true;
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != i && !comps[j].contains(w)) { needed = false; break; }
      if (!needed) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        --i;
      }
    }
  }
  return comps;
}

}  // namespace detail

/// Irredundant irreducible decomposition; canonical (sorted) component order.
inline Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  detail::check_decomposable(ideal);
  std::map<MonomialIdeal, std::set<IrreducibleComponent>> memo;
  std::set<IrreducibleComponent> comps;
  detail::split_components(ideal, memo, comps);
  std::vector<IrreducibleComponent> list(comps.begin(), comps.end());
  list = detail::drop_redundant(std::move(list), ideal.dimension());
  return Decomposition{std::move(list), true};
}

/// Primary decomposition obtained by grouping irreducible components that share
/// a radical support and intersecting each group.
inline std::vector<std::pair<std::set<std::size_t>, MonomialIdeal>>
primary_decomposition(const MonomialIdeal& ideal) {
  Decomposition dec = irreducible_decomposition(ideal);
  std::map<std::set<std::size_t>, MonomialIdeal> groups;
  for (const IrreducibleComponent& c : dec.components) {
    auto [it, inserted] = groups.emplace(c.support(), c.to_ideal());
    if (!inserted) it->second = intersect(it->second, c.to_ideal());
  }
  return {groups.begin(), groups.end()};
}

inline std::set<std::set<std::size_t>> minimal_primes(const MonomialIdeal& ideal) {
  Decomposition dec = irreducible_decomposition(ideal);
  std::set<std::set<std::size_t>> supports;
  for (const IrreducibleComponent& c : dec.components) supports.insert(c.support());
  std::set<std::set<std::size_t>> minimal;
  for (const auto& s : supports) {
    bool has_smaller = false;
    for (const auto& t : supports)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        has_smaller = true;
        break;
      }
    if (!has_smaller) minimal.insert(s);
  }
  return minimal;
}

/// True iff the radical is the maximal ideal, i.e. a pure power of every
/// variable occurs among the minimal generators.
inline bool is_m_primary(const MonomialIdeal& ideal) {
  detail::check_decomposable(ideal);
  std::vector<bool> covered(ideal.dimension(), false);
  for (const Monomial& g : ideal.generators()) {
    std::size_t top = g.max_var_index();
    if (top > 0 && g[top - 1] == g.degree()) covered[top - 1] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

/// For n = 2: the generator table (a_i, b_i) sorted so a strictly decreases
/// and b strictly increases.
inline std::vector<std::pair<Exponent, Exponent>> two_variable_form(
    const MonomialIdeal& ideal) {
  if (ideal.dimension() != 2)
    throw std::domain_error("two-variable form requires ambient dimension 2");
  detail::check_decomposable(ideal);
  std::vector<std::pair<Exponent, Exponent>> table;
  for (const Monomial& g : ideal.generators()) table.emplace_back(g[0], g[1]);
  std::sort(table.begin(), table.end(),
            [](const auto& p, const auto& q) { return p.first > q.first; });
  return table;
}

}  // namespace satnum
