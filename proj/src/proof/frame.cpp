#include <stdexcept>

#include "smlab/proof/chains.hpp"

namespace smlab::proof {

RationalExpr gauss_curvature_frame(const DerivationContext& ctx) {
  const RationalExpr k1{Var::K1};
  const RationalExpr& k2 = ctx.defined("kappa2");
  const RationalExpr gap = k1 - k2;
  const RationalExpr e1_k2 = apply_derivation(k2, Derivation::E1, ctx);
  const RationalExpr e2_k1 = apply_derivation(k1, Derivation::E2, ctx);
  return -apply_derivation(e1_k2 / gap, Derivation::E1, ctx) + apply_derivation(e2_k1 / gap, Derivation::E2, ctx) -
         (e1_k2.pow(2) + e2_k1.pow(2)) / gap.pow(2);
}

RationalExpr frame_equation(const DerivationContext& ctx, int index, const RationalExpr& gamma,
                            const RationalExpr& mu) {
  const RationalExpr k1{Var::K1};
  const RationalExpr& k2 = ctx.defined("kappa2");
  const RationalExpr& w1 = ctx.defined("omega1");
  const RationalExpr& w2 = ctx.defined("omega2");
  // normal component of a: <N,a> = H <Phi,a> / alpha
  const RationalExpr normal = ctx.defined("H") * RationalExpr(Var::W) / RationalExpr(Var::Alpha);
  using enum Derivation;
  switch (index) {
    case 1: return apply_derivation(gamma, E1, ctx) - mu * w1 - normal * k1;
    case 2: return apply_derivation(gamma, E2, ctx) - mu * w2;
    case 3: return apply_derivation(mu, E1, ctx) + gamma * w1;
    case 4: return apply_derivation(mu, E2, ctx) + gamma * w2 - normal * k2;
    case 5: return apply_derivation(normal, E1, ctx) + gamma * k1;
    case 6: return apply_derivation(normal, E2, ctx) + mu * k2;
    default: throw std::out_of_range("frame equation index must be 1..6");
  }
}

std::vector<ProofReport> run_all(const ChainOptions& options) {
  return {run_theorem1_chain(options), run_theorem2_chain(options), run_theorem3_check(options)};
}

}  // namespace smlab::proof
