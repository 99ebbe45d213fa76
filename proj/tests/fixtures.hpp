#pragma once

// Shared worked examples used as frozen fixtures across the test suites.

#include <vector>

#include "satnum/ideal.hpp"

namespace satnum::fixtures {

inline MonomialIdeal from_rows(std::size_t n,
                               const std::vector<std::vector<Exponent>>& rows) {
  std::vector<Monomial> gens;
  gens.reserve(rows.size());
  for (const auto& row : rows) gens.emplace_back(row);
  return MonomialIdeal(n, std::move(gens));
}

/// The strongly stable ideal in four variables generated by the strongly
/// stable closure of {x1^2, x2^2 x3^2, x1 x2 x3 x4}; nine minimal generators.
inline MonomialIdeal strongly_stable_n4() {
  return from_rows(4, {
      {2, 0, 0, 0},  // x1^2
      {1, 1, 2, 0},  // x1 x2 x3^2
      {1, 2, 1, 0},  // x1 x2^2 x3
      {1, 3, 0, 0},  // x1 x2^3
      {0, 3, 1, 0},  // x2^3 x3
      {0, 4, 0, 0},  // x2^4
      {0, 2, 2, 0},  // x2^2 x3^2
      {1, 2, 0, 1},  // x1 x2^2 x4
      {1, 1, 1, 1},  // x1 x2 x3 x4
  });
}

/// The square of strongly_stable_n4(); 23 minimal generators.
inline MonomialIdeal strongly_stable_n4_squared() {
  return from_rows(4, {
      {4, 0, 0, 0}, {3, 2, 0, 1}, {3, 1, 1, 1}, {3, 1, 2, 0}, {3, 2, 1, 0},
      {3, 3, 0, 0}, {2, 4, 0, 0}, {2, 3, 1, 0}, {2, 2, 2, 0}, {1, 6, 0, 1},
      {1, 7, 0, 0}, {0, 8, 0, 0}, {1, 5, 1, 1}, {1, 6, 1, 0}, {0, 7, 1, 0},
      {1, 4, 2, 1}, {1, 3, 3, 1}, {1, 3, 4, 0}, {1, 4, 3, 0}, {1, 5, 2, 0},
      {0, 6, 2, 0}, {0, 5, 3, 0}, {0, 4, 4, 0},
  });
}

/// The ten-generator m-primary non-stable ideal in two variables.
inline MonomialIdeal two_var_ten_gens() {
  return from_rows(2, {
      {50, 0}, {40, 10}, {39, 34}, {38, 35}, {37, 36},
      {36, 37}, {35, 38}, {34, 39}, {10, 40}, {0, 50},
  });
}

/// The square of two_var_ten_gens(); nine minimal generators.
inline MonomialIdeal two_var_ten_gens_squared() {
  return from_rows(2, {
      {100, 0}, {90, 10}, {80, 20}, {60, 40}, {50, 50},
      {40, 60}, {20, 80}, {10, 90}, {0, 100},
  });
}

/// The intersection (x1^2,x2) ∩ (x1,x2^2) ∩ (x1^3,x2^2,x3^2) in three
/// variables, with saturation number 3 but component bound 5.
inline MonomialIdeal three_component_n3() {
  MonomialIdeal a = from_rows(3, {{2, 0, 0}, {0, 1, 0}});
  MonomialIdeal b = from_rows(3, {{1, 0, 0}, {0, 2, 0}});
  MonomialIdeal c = from_rows(3, {{3, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  return intersect(intersect(a, b), c);
}

}  // namespace satnum::fixtures
