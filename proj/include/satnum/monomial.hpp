#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace satnum {

using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in addition");
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

/// A monomial in a fixed number of variables, stored as its exponent vector.
/// The all-zero vector is the unit monomial 1.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<Exponent> exponents)
      : exps_(std::move(exponents)) {
    for (Exponent e : exps_)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }

  static Monomial unit(std::size_t n) {
    return Monomial(std::vector<Exponent>(n, 0));
  }

  /// x_var^e with var 1-based.
  static Monomial variable(std::size_t n, std::size_t var, Exponent e = 1) {
    if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
    std::vector<Exponent> v(n, 0);
    v[var - 1] = e;
    return Monomial(std::move(v));
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  Exponent degree() const {
    Exponent d = 0;
    for (Exponent e : exps_) d = checked_add(d, e);
    return d;
  }

  bool divides(const Monomial& other) const {
    check_same_size(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    check_same_size(other);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(v));
  }

  Monomial gcd(const Monomial& other) const {
    check_same_size(other);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::min(exps_[i], other.exps_[i]);
    return Monomial(std::move(v));
  }

  Monomial operator*(const Monomial& other) const {
    check_same_size(other);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = checked_add(exps_[i], other.exps_[i]);
    return Monomial(std::move(v));
  }

  /// this / gcd(this, f): the generator of (this) : (f).
  Monomial quotient_by(const Monomial& f) const {
    check_same_size(f);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = std::max<Exponent>(exps_[i] - f.exps_[i], 0);
    return Monomial(std::move(v));
  }

  /// Exact division; requires f | this.
  Monomial operator/(const Monomial& f) const {
    check_same_size(f);
    std::vector<Exponent> v(exps_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (f.exps_[i] > exps_[i]) throw std::invalid_argument("inexact monomial division");
      v[i] = exps_[i] - f.exps_[i];
    }
    return Monomial(std::move(v));
  }

  /// Largest 1-based variable index dividing the monomial; 0 for the unit.
  std::size_t max_var_index() const {
    for (std::size_t i = exps_.size(); i > 0; --i)
      if (exps_[i - 1] > 0) return i;
    return 0;
  }

  auto operator<=>(const Monomial& other) const = default;

 private:
  void check_same_size(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw std::invalid_argument("monomial dimension mismatch");
  }

  std::vector<Exponent> exps_;
};

}  // namespace satnum
