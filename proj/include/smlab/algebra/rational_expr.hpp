#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smlab/algebra/polynomial.hpp"

namespace smlab::algebra {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of Q(vars) in canonical form: gcd(num, den) = 1, den an integer
// primitive polynomial with positive leading coefficient, zero as 0/1.
// Canonical forms are unique, so equality is structural.
class RationalExpr {
 public:
  RationalExpr() : den_(1L) {}
  RationalExpr(long value) : num_(value), den_(1L) {}                 // NOLINT
  RationalExpr(const Rational& value) : num_(value), den_(1L) {}      // NOLINT
  RationalExpr(Var v) : num_(v), den_(1L) {}                          // NOLINT
  RationalExpr(const Polynomial& p) : num_(p), den_(1L) {}            // NOLINT
  // Throws AlgebraError when den is zero.
  RationalExpr(const Polynomial& num, const Polynomial& den);

  static RationalExpr parse(std::string_view text);
  // num / (f1 * f2 * ...), reducing against one factor at a time; much
  // cheaper than one gcd with the full product when the factors are small.
  static RationalExpr over_factors(Polynomial num, const std::vector<Polynomial>& den_factors);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  bool free_of(std::initializer_list<Var> vars) const;

  RationalExpr operator-() const;
  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  // Throws AlgebraError naming both operands when b is zero.
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr& operator+=(const RationalExpr& b) { return *this = *this + b; }
  RationalExpr& operator-=(const RationalExpr& b) { return *this = *this - b; }
  RationalExpr& operator*=(const RationalExpr& b) { return *this = *this * b; }
  RationalExpr& operator/=(const RationalExpr& b) { return *this = *this / b; }
  RationalExpr pow(int n) const;
  RationalExpr inverse() const;

  RationalExpr partial(Var v) const;

  // Simultaneous substitution. Throws AlgebraError when a denominator
  // becomes identically zero.
  RationalExpr substitute(const std::map<Var, RationalExpr>& bindings) const;

  Rational evaluate(const std::map<Var, Rational>& point) const;
  double evaluate(const std::map<Var, double>& point) const;

  std::string str() const;

  bool operator==(const RationalExpr& other) const { return num_ == other.num_ && den_ == other.den_; }

 private:
  struct Canonical {};
  RationalExpr(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  // num/den with gcd(num, den) already 1; only fixes the scalar.
  static RationalExpr scaled_form(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

// Polynomial substitution returning numerator and the common denominator
// before normalization.
RationalExpr substitute(const Polynomial& p, const std::map<Var, RationalExpr>& bindings);

}  // namespace smlab::algebra
