#pragma once

#include <optional>
#include <vector>

#include "smlab/proof/checkpoint.hpp"
#include "smlab/proof/context.hpp"
#include "smlab/proof/report.hpp"

namespace smlab::proof {

struct RuleFlip {
  Derivation op;
  Var generator;
};

struct ChainOptions {
  // Mutation control: negate one derivation rule throughout the chain.
  std::optional<RuleFlip> flip;
};

// Gauss equation in the principal frame: K expressed through e1, e2
// derivatives of kappa1, kappa2 (uses the "kappa2" abbreviation).
RationalExpr gauss_curvature_frame(const DerivationContext& ctx);

// The six compatibility equations for the tangent part gamma*e1 + mu*e2 of
// the direction a, written as "0 = ...". Index 1..6. Needs abbreviations
// kappa2, H, omega1, omega2.
RationalExpr frame_equation(const DerivationContext& ctx, int index, const RationalExpr& gamma,
                            const RationalExpr& mu);

// Surfaces with constant Gauss curvature K = c != 0 and nonconstant
// principal curvatures: every step to the contradiction.
class ConstantGaussChain {
 public:
  explicit ConstantGaussChain(ChainOptions options = {});

  const DerivationContext& context() const { return ctx_; }
  const NonvanishingRegistry& registry() const { return registry_; }

  std::vector<Checkpoint> derive_gamma_mu();
  // Resolves the d11, d12, d22 placeholders in the context rules.
  std::vector<Checkpoint> derive_second_derivatives();
  std::vector<Checkpoint> check_frame_system();
  std::vector<Checkpoint> branch_e1_zero();
  std::vector<Checkpoint> check_pe1();
  std::vector<Checkpoint> derive_pe2();
  Checkpoint check_determinant();
  std::vector<Checkpoint> branch_alpha_squared_4(int alpha0);
  std::vector<Checkpoint> solve_z();
  std::vector<Checkpoint> final_contradiction();

  ProofReport run();

 private:
  DerivationContext ctx_;
  DerivationContext placeholder_ctx_;
  NonvanishingRegistry registry_;
  // Coefficients of the two quadratic relations in (u1^2, u2^2).
  RationalExpr p1_, q1_, r1_, p2_, q2_, r2_;
  RationalExpr z1_, z2_;
};

DerivationContext build_context_theorem1(const ChainOptions& options = {});

// Theorem 1 (constant Gauss curvature).
ProofReport run_theorem1_chain(const ChainOptions& options = {});
// Theorem 2 (constant principal curvature kappa2 = c).
ProofReport run_theorem2_chain(const ChainOptions& options = {});
// Theorem 3 (constant mean curvature).
ProofReport run_theorem3_check(const ChainOptions& options = {});

// All three in fixed order.
std::vector<ProofReport> run_all(const ChainOptions& options = {});

}  // namespace smlab::proof
