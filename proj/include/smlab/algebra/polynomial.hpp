#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smlab/algebra/monomial.hpp"

namespace smlab::algebra {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial mono;
  Rational coef;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
// decreasing monomial order with no zero coefficients, so structural equality
// is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);                 // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& value);      // NOLINT(google-explicit-constructor)
  Polynomial(Var v);                      // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, Rational coef);

  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value; requires is_constant().
  Rational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coef; }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  bool contains(Var v) const { return degree(v) > 0; }
  std::set<Var> variables() const;
  // Exponent-wise minimum over all terms.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& s) const;
  Polynomial times(const Monomial& m, const Rational& coef) const;
  // Requires m to divide every term.
  Polynomial divided_by(const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  // Exact multivariate quotient, or nullopt when divisor does not divide.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

  // Coefficients with respect to v: result[i] multiplies v^i.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v);

  Polynomial partial(Var v) const;

  // lcm of coefficient denominators divided by gcd of numerators, signed so
  // that scaled(integer_normalizer()) has integer coprime coefficients and a
  // positive leading coefficient.
  Rational integer_normalizer() const;
  Polynomial integer_primitive() const { return is_zero() ? *this : scaled(integer_normalizer()); }

  Rational evaluate(const std::map<Var, Rational>& point) const;
  double evaluate(const std::map<Var, double>& point) const;

  bool operator==(const Polynomial& other) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace smlab::algebra
