#include "smlab/algebra/rational_expr.hpp"

#include <vector>

#include "smlab/algebra/gcd.hpp"
#include "smlab/algebra/text.hpp"

namespace smlab::algebra {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.exact_divide(b);
  if (!q) throw AlgebraError("internal: inexact division by a gcd factor");
  return *q;
}

bool is_one(const Polynomial& p) { return p.is_constant() && p.constant_value() == 1; }

}  // namespace

RationalExpr::RationalExpr(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw AlgebraError("zero denominator in (" + to_string(num) + ")/(0)");
  if (num.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  Polynomial g = gcd(num, den);
  if (is_one(g)) {
    *this = scaled_form(num, den);
  } else {
    *this = scaled_form(quotient(num, g), quotient(den, g));
  }
}

// gcd(n, a b) = h gcd(n / h, b) with h = gcd(n, a), since n / h and a / h
// are coprime.
RationalExpr RationalExpr::over_factors(Polynomial num, const std::vector<Polynomial>& den_factors) {
  Polynomial den(1L);
  for (const Polynomial& f : den_factors) {
    if (f.is_zero()) throw AlgebraError("zero denominator factor under (" + to_string(num) + ")");
    if (num.is_zero()) continue;
    const Polynomial g = gcd(num, f);
    if (is_one(g)) {
      den = den * f;
    } else {
      num = quotient(num, g);
      den = den * quotient(f, g);
    }
  }
  if (num.is_zero()) return RationalExpr();
  return scaled_form(std::move(num), std::move(den));
}

RationalExpr RationalExpr::scaled_form(Polynomial num, Polynomial den) {
  if (num.is_zero()) return RationalExpr();
  const Rational s = den.integer_normalizer();
  if (s != 1) {
    num = num.scaled(s);
    den = den.scaled(s);
  }
  return RationalExpr(std::move(num), std::move(den), Canonical{});
}

RationalExpr RationalExpr::parse(std::string_view text) { return parse_expression(text); }

bool RationalExpr::free_of(std::initializer_list<Var> vars) const {
  for (Var v : vars) {
    if (contains(v)) return false;
  }
  return true;
}

RationalExpr RationalExpr::operator-() const { return RationalExpr(-num_, den_, Canonical{}); }

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  if (is_one(a.den_)) return RationalExpr::scaled_form(a.num_ * b.den_ + b.num_, b.den_);
  if (is_one(b.den_)) return RationalExpr::scaled_form(a.num_ + b.num_ * a.den_, a.den_);
  const Polynomial g = gcd(a.den_, b.den_);
  if (is_one(g)) {
    return RationalExpr::scaled_form(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  // With both operands reduced, gcd(num, den) divides g.
  const Polynomial ad = quotient(a.den_, g);
  const Polynomial bd = quotient(b.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  Polynomial den = ad * b.den_;
  if (num.is_zero()) return RationalExpr();
  const Polynomial g2 = gcd(num, g);
  if (!is_one(g2)) {
    num = quotient(num, g2);
    den = quotient(den, g2);
  }
  return RationalExpr::scaled_form(std::move(num), std::move(den));
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  if (a.is_zero() || b.is_zero()) return RationalExpr();
  Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!is_one(bd)) {
    const Polynomial g = gcd(an, bd);
    if (!is_one(g)) {
      an = quotient(an, g);
      bd = quotient(bd, g);
    }
  }
  if (!is_one(ad)) {
    const Polynomial g = gcd(bn, ad);
    if (!is_one(g)) {
      bn = quotient(bn, g);
      ad = quotient(ad, g);
    }
  }
  return RationalExpr::scaled_form(an * bn, ad * bd);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.is_zero()) throw AlgebraError("division by zero: (" + a.str() + ") / (" + b.str() + ")");
  return a * b.inverse();
}

RationalExpr RationalExpr::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero expression");
  return scaled_form(den_, num_);
}

RationalExpr RationalExpr::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return scaled_form(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RationalExpr RationalExpr::partial(Var v) const {
  if (!contains(v)) return RationalExpr();
  if (!den_.contains(v)) return RationalExpr(num_.partial(v), den_);
  // (n' d - n d') / d^2
  return RationalExpr(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
}

namespace {

struct BoundVar {
  Var var;
  unsigned degree;                // degree in the top-level polynomial
  std::vector<Polynomial> num_pw;  // num^i
  std::vector<Polynomial> den_pw;  // den^i
};

// Returns N with substitute(p) = N / prod_{j >= k} den_j^degree_j.
Polynomial substitute_rec(const Polynomial& p, const std::vector<BoundVar>& bound, std::size_t k) {
  if (k == bound.size() || p.is_zero()) return p;
  const BoundVar& b = bound[k];
  const auto coeffs = p.coefficients_in(b.var);
  Polynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Polynomial inner = substitute_rec(coeffs[i], bound, k + 1);
    if (inner.is_zero()) continue;
    out += inner * b.num_pw[i] * b.den_pw[b.degree - i];
  }
  return out;
}

}  // namespace

RationalExpr substitute(const Polynomial& p, const std::map<Var, RationalExpr>& bindings) {
  std::vector<BoundVar> bound;
  for (const auto& [v, value] : bindings) {
    const unsigned d = p.degree(v);
    if (d == 0) continue;
    BoundVar b{v, d, {Polynomial(1L)}, {Polynomial(1L)}};
    for (unsigned i = 1; i <= d; ++i) {
      b.num_pw.push_back(b.num_pw.back() * value.num());
      b.den_pw.push_back(b.den_pw.back() * value.den());
    }
    bound.push_back(std::move(b));
  }
  if (bound.empty()) return RationalExpr(p);
  Polynomial den(1L);
  for (const auto& b : bound) den = den * b.den_pw[b.degree];
  return RationalExpr(substitute_rec(p, bound, 0), den);
}

RationalExpr RationalExpr::substitute(const std::map<Var, RationalExpr>& bindings) const {
  const RationalExpr top = algebra::substitute(num_, bindings);
  const RationalExpr bottom = algebra::substitute(den_, bindings);
  if (bottom.is_zero()) {
    throw AlgebraError("substitution makes the denominator (" + to_string(den_) + ") vanish");
  }
  return top / bottom;
}

Rational RationalExpr::evaluate(const std::map<Var, Rational>& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw AlgebraError("denominator (" + to_string(den_) + ") vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

double RationalExpr::evaluate(const std::map<Var, double>& point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string RationalExpr::str() const { return to_string(*this); }

}  // namespace smlab::algebra
