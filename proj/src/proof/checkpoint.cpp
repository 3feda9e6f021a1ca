#include "smlab/proof/checkpoint.hpp"

#include "smlab/algebra/text.hpp"

namespace smlab::proof {

using algebra::Var;

std::string_view name(CheckMode mode) {
  switch (mode) {
    case CheckMode::ExactZero: return "exact-zero";
    case CheckMode::ExactEqual: return "exact-equal";
    case CheckMode::UpToFactor: return "equal-up-to-nonzero-factor";
  }
  return "?";
}

void NonvanishingRegistry::add(const std::string& label, const RationalExpr& factor) {
  if (!factor.is_polynomial() || factor.num().is_constant()) return;
  factors_.emplace_back(label, factor.num().integer_primitive());
}

NonvanishingRegistry NonvanishingRegistry::substituted(const std::map<Var, RationalExpr>& bindings) const {
  NonvanishingRegistry out;
  for (const auto& [label, p] : factors_) {
    const RationalExpr s = RationalExpr(p).substitute(bindings);
    out.add(label, RationalExpr(s.num()));
  }
  return out;
}

Polynomial NonvanishingRegistry::unregistered_part(const Polynomial& p) const {
  Polynomial rest = p.integer_primitive();
  bool progress = true;
  while (progress && !rest.is_constant()) {
    progress = false;
    for (const auto& [label, f] : factors_) {
      while (!rest.is_constant()) {
        auto q = rest.exact_divide(f);
        if (!q) break;
        rest = q->integer_primitive();
        progress = true;
      }
    }
  }
  return rest;
}

Checkpoint check_zero(std::string name, const RationalExpr& computed) {
  Checkpoint cp{std::move(name), CheckMode::ExactZero, computed, RationalExpr(), computed.is_zero(), {}, {}};
  return cp;
}

Checkpoint check_equal(std::string name, const RationalExpr& computed, const RationalExpr& expected) {
  Checkpoint cp{std::move(name), CheckMode::ExactEqual, computed, expected, computed == expected, {}, {}};
  return cp;
}

Checkpoint check_up_to_factor(std::string name, const RationalExpr& computed, const RationalExpr& expected,
                              const NonvanishingRegistry& registry, FactorPolicy policy) {
  Checkpoint cp{std::move(name), CheckMode::UpToFactor, computed, expected, false, {}, {}};
  if (expected.is_zero()) {
    cp.notes.push_back("expected expression is zero");
    return cp;
  }
  if (computed.is_zero()) {
    cp.notes.push_back("computed expression vanishes identically");
    return cp;
  }
  const RationalExpr factor = computed / expected;
  cp.factor = factor;
  bool ok = true;
  for (Var v : algebra::kAllVars) {
    if (v == Var::Alpha || v == Var::C || v == Var::K1 || v == Var::H0) continue;
    if (factor.contains(v)) {
      cp.notes.push_back("factor depends on " + std::string(algebra::name(v)));
      ok = false;
    }
  }
  for (const Polynomial* part : {&factor.num(), &factor.den()}) {
    const Polynomial rest = registry.unregistered_part(*part);
    if (!rest.is_constant()) {
      cp.notes.push_back("factor contains unregistered (" + algebra::to_string(rest) + ")");
      if (policy.require_registered) ok = false;
    }
  }
  cp.passed = ok;
  return cp;
}

void audit_denominators(Checkpoint& cp, const NonvanishingRegistry& registry) {
  for (const RationalExpr* e : {&cp.computed, &cp.expected}) {
    const Polynomial rest = registry.unregistered_part(e->den());
    if (!rest.is_constant()) {
      cp.notes.push_back("unregistered denominator (" + algebra::to_string(rest) + ")");
    }
  }
}

bool is_contradiction_polynomial(const RationalExpr& p) {
  if (p.is_zero() || !p.is_polynomial()) return false;
  for (Var v : algebra::kAllVars) {
    if (v != Var::Alpha && v != Var::C && v != Var::K1 && p.contains(v)) return false;
  }
  return p.num().degree(Var::K1) > 0;
}

}  // namespace smlab::proof
