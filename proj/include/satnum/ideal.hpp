#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satnum/monomial.hpp"

namespace satnum {

/// A monomial ideal held by its minimal generating set, sorted lexicographically
/// ascending on exponent vectors. The empty set is the zero ideal, {1} the unit
/// ideal; both are canonical and exclusive.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    for (const Monomial& g : gens)
      if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }

  static MonomialIdeal unit(std::size_t n) {
    return MonomialIdeal(n, {Monomial::unit(n)});
  }

  /// The maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t n) {
    std::vector<Monomial> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(Monomial::variable(n, i));
    return MonomialIdeal(n, std::move(gens));
  }

  static MonomialIdeal principal(Monomial u) {
    std::size_t n = u.size();
    return MonomialIdeal(n, {std::move(u)});
  }

  std::size_t dimension() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& u) const {
    if (u.size() != n_) throw std::invalid_argument("monomial dimension mismatch");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(u); });
  }

  bool contains_ideal(const MonomialIdeal& other) const {
    if (other.n_ != n_) throw std::invalid_argument("ideal dimension mismatch");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial& g) { return contains(g); });
  }

  bool operator==(const MonomialIdeal& other) const = default;
  auto operator<=>(const MonomialIdeal& other) const = default;

  /// Divisibility-minimal subset in canonical order; the generated ideal is
  /// unchanged.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (!gens.empty() && gens.front().is_unit()) return {gens.front()};
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
      bool dominated = std::any_of(out.begin(), out.end(),
                                   [&](const Monomial& h) { return h.divides(g); });
      if (!dominated) out.push_back(g);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline void check_same_dimension(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("ideal dimension mismatch");
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dimension(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dimension());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) gens.push_back(u.lcm(v));
  return MonomialIdeal(a.dimension(), std::move(gens));
}

/// I : (f) for a single monomial f.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& u : ideal.generators()) gens.push_back(u.quotient_by(f));
  return MonomialIdeal(ideal.dimension(), std::move(gens));
}

/// I : J, computed as the intersection of I : (f) over f in G(J).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
  check_same_dimension(ideal, divisor);
  if (divisor.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  if (ideal.is_zero()) return ideal;
  MonomialIdeal result = MonomialIdeal::unit(ideal.dimension());
  bool first = true;
  for (const Monomial& f : divisor.generators()) {
    MonomialIdeal part = colon(ideal, f);
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_dimension(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dimension());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) gens.push_back(u * v);
  return MonomialIdeal(a.dimension(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& ideal, long k) {
  if (k < 0) throw std::invalid_argument("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.dimension());
  for (long i = 0; i < k; ++i) result = multiply(result, ideal);
  return result;
}

}  // namespace satnum
