#include "smlab/algebra/gcd.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace smlab::algebra {

namespace {

// Univariate view: coefficient polynomials indexed by degree in the main
// variable, trailing entry nonzero.
using UPoly = std::vector<Polynomial>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly to_upoly(const Polynomial& p, Var v) {
  UPoly out = p.coefficients_in(v);
  trim(out);
  return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const Polynomial& lcb = b.back();
  int e = deg(a) - db + 1;
  while (deg(a) >= db) {
    const int shift = deg(a) - db;
    Polynomial lead = a.back();
    for (auto& c : a) c = c * lcb;
    for (int i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    Polynomial f = lcb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Polynomial exact(const Polynomial& num, const Polynomial& den) {
  auto q = num.exact_divide(den);
  if (!q) throw std::logic_error("non-exact division inside gcd");
  return *q;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

Polynomial content_of(const UPoly& coeffs) {
  Polynomial g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.integer_primitive() : gcd(g, c);
    if (g.is_constant()) return Polynomial(1L);
  }
  return g;
}

// gcd(p, other) where other is free of v: fold other into the running gcd of
// p's coefficients in v, so it never grows beyond other.
Polynomial gcd_with_coefficients(const Polynomial& p, Var v, const Polynomial& other) {
  Polynomial g = other;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(c, g);
    if (g.is_constant()) return Polynomial(1L);
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, Var v) {
  Polynomial cont = content_of(p.coefficients_in(v));
  if (cont.is_constant()) return p;
  return exact(p, cont);
}

// a, b nonzero, integer primitive, free of monomial content.
Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(1L);
  if (a == b) return a.integer_primitive();

  const auto va = a.variables();
  const auto vb = b.variables();
  for (Var v : va) {
    if (!vb.contains(v)) return gcd_with_coefficients(a, v, b);
  }
  for (Var v : vb) {
    if (!va.contains(v)) return gcd_with_coefficients(b, v, a);
  }

  // One divides the other: cheap and common for rational-function operands.
  if (a.size() <= b.size()) {
    if (b.exact_divide(a)) return a.integer_primitive();
  } else if (a.exact_divide(b)) {
    return b.integer_primitive();
  }

  Var main = *va.begin();
  unsigned best = std::numeric_limits<unsigned>::max();
  for (Var v : va) {
    unsigned d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }

  Polynomial ca = content_of(to_upoly(a, main));
  Polynomial cb = content_of(to_upoly(b, main));
  Polynomial pa = ca.is_constant() ? a : exact(a, ca);
  Polynomial pb = cb.is_constant() ? b : exact(b, cb);
  Polynomial cont = (ca.is_constant() || cb.is_constant()) ? Polynomial(1L) : gcd_recursive(ca, cb);
  Polynomial prim = subresultant_gcd(pa, pb, main);
  return (cont * prim).integer_primitive();
}

}  // namespace

Polynomial content(const Polynomial& p, Var v) { return content_of(to_upoly(p, v)); }

Polynomial subresultant_gcd(const Polynomial& a, const Polynomial& b, Var v) {
  UPoly A = to_upoly(a, v);
  UPoly B = to_upoly(b, v);
  if (deg(A) < deg(B)) std::swap(A, B);
  Polynomial g(1L);
  Polynomial h(1L);
  for (;;) {
    const int delta = deg(A) - deg(B);
    UPoly R = pseudo_remainder(A, B);
    if (R.empty()) return primitive_in(Polynomial::from_coefficients(B, v), v).integer_primitive();
    if (deg(R) == 0) return Polynomial(1L);
    A = std::move(B);
    Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    B = std::move(R);
    if (!divisor.is_constant() || divisor.constant_value() != 1) {
      for (auto& c : B) c = exact(c, divisor);
    }
    g = A.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.integer_primitive();
  if (b.is_zero()) return a.integer_primitive();
  Polynomial pa = a.integer_primitive();
  Polynomial pb = b.integer_primitive();
  const Monomial ma = pa.monomial_content();
  const Monomial mb = pb.monomial_content();
  const Monomial mono = Monomial::gcd(ma, mb);
  if (!ma.is_one()) pa = pa.divided_by(ma);
  if (!mb.is_one()) pb = pb.divided_by(mb);
  Polynomial rest = gcd_recursive(pa, pb);
  return rest.times(mono, Rational(1)).integer_primitive();
}

}  // namespace smlab::algebra
