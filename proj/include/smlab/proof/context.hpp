#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smlab/algebra/rational_expr.hpp"

namespace smlab::proof {

using algebra::RationalExpr;
using algebra::Var;

// The two frame derivations e1, e2 acting on functions of the surface.
enum class Derivation { E1, E2 };

std::string_view name(Derivation op);

class MissingRule : public std::runtime_error {
 public:
  MissingRule(Derivation op, Var generator);
};

// Formal derivation table: how E1 and E2 act on each generator, which
// indeterminates are constants, and named abbreviations (kappa2, H, omega,
// gamma, mu) used when transcribing the frame equations.
class DerivationContext {
 public:
  void add_constant(Var v) { constants_.insert(v); }
  bool is_constant(Var v) const { return constants_.contains(v); }

  void set_rule(Derivation op, Var generator, RationalExpr value);
  bool has_rule(Derivation op, Var generator) const;
  const RationalExpr& rule(Derivation op, Var generator) const;
  std::vector<std::pair<Derivation, Var>> rule_keys() const;

  void define(const std::string& name, RationalExpr value);
  const RationalExpr& defined(const std::string& name) const;

  // Test hook: every rule later installed for (op, generator) is negated.
  // Installing the hook also negates an existing rule.
  void flip_rule_sign(Derivation op, Var generator);

 private:
  std::set<Var> constants_;
  std::map<std::pair<Derivation, Var>, RationalExpr> rules_;
  std::map<std::string, RationalExpr> defined_;
  std::optional<std::pair<Derivation, Var>> flipped_;
};

// E(expr) = sum over generators g of d(expr)/dg * E(g). Constants have
// E = 0; any other indeterminate without a rule raises MissingRule.
RationalExpr apply_derivation(const RationalExpr& expr, Derivation op, const DerivationContext& ctx);

}  // namespace smlab::proof
