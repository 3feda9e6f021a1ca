#include "smlab/algebra/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace smlab::algebra {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two sorted term lists as a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].mono <=> b[j].mono;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coef + b[j].coef) : Rational(a[i].coef - b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coef = -out.back().coef;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Polynomial::Polynomial(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v != 0) terms_.push_back({Monomial{}, std::move(v)});
}

Polynomial::Polynomial(Var v) { terms_.push_back({Monomial::of(v), Rational(1)}); }

Polynomial::Polynomial(const Monomial& m, Rational coef) {
  coef.canonicalize();
  if (coef != 0) terms_.push_back({m, std::move(coef)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  for (auto& t : terms) {
    t.coef.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_.front().coef;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exponent(v));
  return d;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> out;
  for (Var v : kAllVars) {
    if (contains(v)) out.insert(v);
  }
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_.front().mono, a.terms_.front().coef);
  if (b.size() == 1) return a.times(b.terms_.front().mono, b.terms_.front().coef);
  std::vector<Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  return Polynomial::from_terms(std::move(prods));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  if (s == 0) return {};
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coef *= s;
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& coef) const {
  if (coef == 0) return {};
  Polynomial out = *this;
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coef *= coef;
  }
  return out;  // multiplication by a monomial preserves the order
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.mono = t.mono / m;
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  assert(!divisor.is_zero());
  if (is_zero()) return Polynomial{};
  if (divisor.size() == 1) {
    const auto& [dm, dc] = divisor.terms_.front();
    Polynomial out = *this;
    for (auto& t : out.terms_) {
      if (!t.mono.divisible_by(dm)) return std::nullopt;
      t.mono = t.mono / dm;
      t.coef /= dc;
    }
    return out;
  }
  const Term& lead = divisor.leading_term();
  std::vector<Term> quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading_term();
    if (!rt.mono.divisible_by(lead.mono)) return std::nullopt;
    Monomial qm = rt.mono / lead.mono;
    Rational qc = rt.coef / lead.coef;
    rem.terms_ = merge(rem.terms_, divisor.times(qm, qc).terms_, -1);
    quotient.push_back({qm, std::move(qc)});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    buckets[e].push_back({t.mono.with_exponent(v, 0), t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms_) {
      terms.push_back({t.mono * Monomial::of(v, static_cast<unsigned>(i)), t.coef});
    }
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::partial(Var v) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    terms.push_back({t.mono.with_exponent(v, e - 1), t.coef * e});
  }
  return from_terms(std::move(terms));
}

Rational Polynomial::integer_normalizer() const {
  if (terms_.empty()) return Rational(1);
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (leading_coefficient() < 0) s = -s;
  return s;
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coef;
    for (Var v : kAllVars) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      auto it = point.find(v);
      assert(it != point.end());
      Rational p = 1;
      for (unsigned k = 0; k < e; ++k) p *= it->second;
      prod *= p;
    }
    sum += prod;
  }
  return sum;
}

double Polynomial::evaluate(const std::map<Var, double>& point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double prod = t.coef.get_d();
    for (Var v : kAllVars) {
      unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      prod *= std::pow(point.at(v), static_cast<int>(e));
    }
    sum += prod;
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coef != other.terms_[i].coef) return false;
  }
  return true;
}

}  // namespace smlab::algebra
