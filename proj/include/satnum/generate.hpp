#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "satnum/decomposition.hpp"
#include "satnum/ideal.hpp"
#include "satnum/stability.hpp"

namespace satnum {

/// Deterministic RNG wrapper. Bounded draws go through the raw engine so the
/// instance stream depends only on the seed, not on a library's distribution
/// implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : engine_() % bound;
  }

  Exponent range(Exponent lo, Exponent hi) {
    return lo + static_cast<Exponent>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned numerator, unsigned denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

inline Monomial random_monomial(Rng& rng, std::size_t n, Exponent exp_max) {
  std::vector<Exponent> v(n);
  for (auto& e : v) e = rng.range(0, exp_max);
  return Monomial(std::move(v));
}

inline Monomial random_nonunit_monomial(Rng& rng, std::size_t n, Exponent exp_max) {
  for (;;) {
    Monomial u = random_monomial(rng, n, exp_max);
    if (!u.is_unit()) return u;
  }
}

/// Random irreducible component; full support three times out of four,
/// otherwise a proper non-empty support.
inline IrreducibleComponent random_irreducible(Rng& rng, std::size_t n_max,
                                               Exponent exp_max) {
  std::size_t n = 2 + rng.below(n_max - 1);
  std::map<std::size_t, Exponent> powers;
  bool full = rng.chance(3, 4);
  for (std::size_t var = 1; var <= n; ++var)
    if (full || rng.chance(1, 2)) powers[var] = rng.range(1, exp_max);
  if (powers.empty()) powers[1 + rng.below(n)] = rng.range(1, exp_max);
  return IrreducibleComponent(n, std::move(powers));
}

inline MonomialIdeal random_two_var(Rng& rng, std::size_t gens_max, Exponent exp_max) {
  std::vector<Monomial> gens;
  std::size_t count = 1 + rng.below(gens_max);
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(random_nonunit_monomial(rng, 2, exp_max));
  return MonomialIdeal(2, std::move(gens));
}

inline MonomialIdeal random_stable(Rng& rng, std::size_t n_max, Exponent exp_max,
                                   bool strong) {
  std::size_t n = 2 + rng.below(n_max - 1);
  std::size_t count = 1 + rng.below(3);
  std::vector<Monomial> seeds;
  for (std::size_t i = 0; i < count; ++i)
    seeds.push_back(random_nonunit_monomial(rng, n, exp_max));
  return stable_closure(seeds, strong);
}

/// m-primary by construction: a pure-power frame x_i^{d_i} plus extra
/// monomials strictly below the frame degrees.
inline MonomialIdeal random_m_primary(Rng& rng, std::size_t n_max, Exponent exp_max,
                                      std::size_t gens_max) {
  std::size_t n = 2 + rng.below(n_max - 1);
  std::vector<Exponent> frame(n);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    frame[i] = rng.range(1, exp_max);
    gens.push_back(Monomial::variable(n, i + 1, frame[i]));
  }
  std::size_t extras = rng.below(gens_max + 1);
  for (std::size_t e = 0; e < extras; ++e) {
    std::vector<Exponent> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.range(0, frame[i] - 1);
    Monomial u{std::move(v)};
    if (!u.is_unit()) gens.push_back(std::move(u));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// All generators of one fixed total degree d, with x_i^d adjoined for every
/// variable so the result is m-primary.
inline MonomialIdeal random_equigenerated_m_primary(Rng& rng, std::size_t n_max,
                                                    Exponent exp_max,
                                                    std::size_t gens_max) {
  std::size_t n = 2 + rng.below(n_max - 1);
  Exponent d = rng.range(2, std::max<Exponent>(2, exp_max));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i + 1, d));
  std::size_t extras = rng.below(gens_max + 1);
  for (std::size_t e = 0; e < extras; ++e) {
    std::vector<Exponent> v(n, 0);
    for (Exponent unit = 0; unit < d; ++unit) ++v[rng.below(n)];
    gens.emplace_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// Random proper non-zero ideal in exactly n variables.
inline MonomialIdeal random_general_like(Rng& rng, std::size_t n, Exponent exp_max,
                                         std::size_t gens_max) {
  std::size_t count = 1 + rng.below(gens_max);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i)
    gens.push_back(random_nonunit_monomial(rng, n, exp_max));
  return MonomialIdeal(n, std::move(gens));
}

inline MonomialIdeal random_general(Rng& rng, std::size_t n_max, Exponent exp_max,
                                    std::size_t gens_max) {
  return random_general_like(rng, 2 + rng.below(n_max - 1), exp_max, gens_max);
}

/// Proper squarefree ideal (possibly the maximal ideal itself).
inline MonomialIdeal random_squarefree(Rng& rng, std::size_t n_max,
                                       std::size_t gens_max) {
  std::size_t n = 2 + rng.below(n_max - 1);
  std::size_t count = 1 + rng.below(gens_max);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Exponent> v(n);
    bool any = false;
    for (auto& e : v) {
      e = rng.chance(1, 2) ? 1 : 0;
      any = any || e == 1;
    }
    if (!any) v[rng.below(n)] = 1;
    gens.emplace_back(std::move(v));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace satnum
