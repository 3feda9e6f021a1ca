#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smlab/algebra/rational_expr.hpp"

namespace smlab::proof {

using algebra::Polynomial;
using algebra::RationalExpr;

enum class CheckMode { ExactZero, ExactEqual, UpToFactor };

std::string_view name(CheckMode mode);

// Factors assumed nonzero on the open set where a proof works
// (kappa1^2 - c, alpha, ...). Used to audit denominators and dropped factors.
class NonvanishingRegistry {
 public:
  void add(const std::string& label, const RationalExpr& factor);
  // Registry with every factor put through the substitution; constant
  // results are dropped.
  NonvanishingRegistry substituted(const std::map<algebra::Var, RationalExpr>& bindings) const;

  // What is left of p after dividing out registered factors (and numeric
  // content); a constant result means p is nonzero under the assumptions.
  Polynomial unregistered_part(const Polynomial& p) const;
  bool covers(const Polynomial& p) const { return unregistered_part(p).is_constant(); }

  const std::vector<std::pair<std::string, Polynomial>>& entries() const { return factors_; }

 private:
  std::vector<std::pair<std::string, Polynomial>> factors_;
};

struct Checkpoint {
  std::string name;
  CheckMode mode = CheckMode::ExactEqual;
  RationalExpr computed;
  RationalExpr expected;
  bool passed = false;
  std::optional<RationalExpr> factor;  // UpToFactor: computed = factor * expected
  std::vector<std::string> notes;      // registry flags and diagnostics
};

Checkpoint check_zero(std::string name, const RationalExpr& computed);
Checkpoint check_equal(std::string name, const RationalExpr& computed, const RationalExpr& expected);

struct FactorPolicy {
  // Fail unless the factor's numerator and denominator are fully registered.
  bool require_registered = false;
};

// Passes iff computed = factor * expected with factor nonzero and depending
// only on alpha, c, kappa1, H. Unregistered pieces of the factor are noted.
Checkpoint check_up_to_factor(std::string name, const RationalExpr& computed, const RationalExpr& expected,
                              const NonvanishingRegistry& registry, FactorPolicy policy = {});

// Appends a note for every denominator of computed/expected that the
// registry does not cover.
void audit_denominators(Checkpoint& cp, const NonvanishingRegistry& registry);

// A contradiction polynomial must be a nonzero polynomial in kappa1 of
// positive degree whose coefficients involve only alpha and c.
bool is_contradiction_polynomial(const RationalExpr& p);

}  // namespace smlab::proof
