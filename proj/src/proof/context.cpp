#include "smlab/proof/context.hpp"

#include <string>

#include "smlab/algebra/gcd.hpp"

namespace smlab::proof {

std::string_view name(Derivation op) { return op == Derivation::E1 ? "E1" : "E2"; }

MissingRule::MissingRule(Derivation op, Var generator)
    : std::runtime_error("no derivation rule for " + std::string(name(op)) + "(" +
                         std::string(algebra::name(generator)) + ")") {}

void DerivationContext::set_rule(Derivation op, Var generator, RationalExpr value) {
  if (flipped_ && *flipped_ == std::pair{op, generator}) value = -value;
  rules_[{op, generator}] = std::move(value);
}

bool DerivationContext::has_rule(Derivation op, Var generator) const {
  return rules_.contains({op, generator});
}

const RationalExpr& DerivationContext::rule(Derivation op, Var generator) const {
  auto it = rules_.find({op, generator});
  if (it == rules_.end()) throw MissingRule(op, generator);
  return it->second;
}

std::vector<std::pair<Derivation, Var>> DerivationContext::rule_keys() const {
  std::vector<std::pair<Derivation, Var>> keys;
  for (const auto& [key, value] : rules_) keys.push_back(key);
  return keys;
}

void DerivationContext::define(const std::string& name, RationalExpr value) {
  defined_[name] = std::move(value);
}

const RationalExpr& DerivationContext::defined(const std::string& name) const {
  auto it = defined_.find(name);
  if (it == defined_.end()) throw std::out_of_range("undefined abbreviation '" + name + "'");
  return it->second;
}

void DerivationContext::flip_rule_sign(Derivation op, Var generator) {
  flipped_ = std::pair{op, generator};
  if (auto it = rules_.find({op, generator}); it != rules_.end()) it->second = -it->second;
}

namespace {

using algebra::Polynomial;

// E(p) for a polynomial p as numerator over the shared denominator den.
struct PolyDerivation {
  Polynomial den{1L};
  std::vector<std::pair<Var, Polynomial>> scaled_rules;  // numerator of rule * den / rule den

  Polynomial apply(const Polynomial& p) const {
    Polynomial out;
    for (const auto& [v, r] : scaled_rules)
      if (p.contains(v)) out += p.partial(v) * r;
    return out;
  }
};

PolyDerivation prepare(const RationalExpr& expr, Derivation op, const DerivationContext& ctx) {
  PolyDerivation d;
  std::vector<std::pair<Var, const RationalExpr*>> images;
  for (Var v : algebra::kAllVars) {
    if (!expr.contains(v) || ctx.is_constant(v)) continue;
    const RationalExpr& image = ctx.rule(op, v);
    if (image.is_zero()) continue;
    images.emplace_back(v, &image);
    // common denominator: lcm of the rule denominators
    const Polynomial g = algebra::gcd(d.den, image.den());
    d.den = d.den * *image.den().exact_divide(g);
  }
  for (const auto& [v, image] : images) {
    d.scaled_rules.emplace_back(v, image->num() * *d.den.exact_divide(image->den()));
  }
  return d;
}

}  // namespace

// E(n/d) = (E(n) d - n E(d)) / d^2, assembled over one common denominator so
// that only the final result is reduced to canonical form.
RationalExpr apply_derivation(const RationalExpr& expr, Derivation op, const DerivationContext& ctx) {
  const PolyDerivation d = prepare(expr, op, ctx);
  if (d.scaled_rules.empty()) return RationalExpr();
  const Polynomial& n = expr.num();
  const Polynomial& q = expr.den();
  if (q.is_constant()) return RationalExpr::over_factors(d.apply(n), {d.den, q});
  return RationalExpr::over_factors(d.apply(n) * q - n * d.apply(q), {d.den, q, q});
}

}  // namespace smlab::proof
