#include "smlab/algebra/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace smlab::algebra {

std::optional<Var> parse_var(std::string_view text) {
  for (Var v : kAllVars) {
    if (name(v) == text) return v;
  }
  return std::nullopt;
}

Monomial::Monomial(std::initializer_list<std::pair<Var, unsigned>> powers) {
  for (const auto& [v, p] : powers) {
    exps_[index(v)] = static_cast<Exponent>(exps_[index(v)] + p);
    degree_ += p;
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.exps_[i] = static_cast<Exponent>(exps_[i] + other.exps_[i]);
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(divisible_by(other));
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) out.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  out.degree_ = degree_ - other.degree_;
  return out;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_) return false;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::with_exponent(Var v, unsigned power) const {
  Monomial out = *this;
  out.degree_ = out.degree_ - out.exps_[index(v)] + power;
  out.exps_[index(v)] = static_cast<Exponent>(power);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto cmp = degree_ <=> other.degree_; cmp != 0) return cmp;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (auto cmp = exps_[i] <=> other.exps_[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = degree_;
  for (Exponent e : exps_) h = h * 1000003u ^ e;
  return h;
}

}  // namespace smlab::algebra
