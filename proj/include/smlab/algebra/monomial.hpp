#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>

#include "smlab/algebra/indeterminate.hpp"

namespace smlab::algebra {

// Power product over the registered indeterminates. Zero exponents are the
// absence of a variable; the dense array never "stores" them as factors.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<std::pair<Var, unsigned>> powers);

  static Monomial of(Var v, unsigned power = 1) { return Monomial{{v, power}}; }

  Exponent exponent(Var v) const { return exps_[index(v)]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;

  Monomial with_exponent(Var v, unsigned power) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lexicographic: total degree first, then exponents in Var order.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::array<Exponent, kNumVars> exps_{};
  unsigned degree_ = 0;
};

}  // namespace smlab::algebra

template <>
struct std::hash<smlab::algebra::Monomial> {
  std::size_t operator()(const smlab::algebra::Monomial& m) const noexcept {
    return m.hash();
  }
};
