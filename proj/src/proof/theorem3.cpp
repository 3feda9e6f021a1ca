#include <chrono>

#include "smlab/proof/chains.hpp"

namespace smlab::proof {

using enum Derivation;

ProofReport run_theorem3_check(const ChainOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const RationalExpr alpha{Var::Alpha}, h{Var::H0}, k1{Var::K1};
  const RationalExpr a1{Var::A1}, a2{Var::A2};
  const RationalExpr k2 = h - k1;

  DerivationContext ctx;
  if (options.flip) ctx.flip_rule_sign(options.flip->op, options.flip->generator);
  ctx.add_constant(Var::Alpha);
  ctx.add_constant(Var::H0);
  ctx.define("kappa2", k2);
  ctx.set_rule(E1, Var::K1, RationalExpr(Var::U1));
  ctx.set_rule(E2, Var::K1, RationalExpr(Var::U2));
  ctx.set_rule(E1, Var::W, a1);
  ctx.set_rule(E2, Var::W, a2);
  // Weingarten: e_i(<N,a>) = -kappa_i <e_i,a>
  ctx.set_rule(E1, Var::NA, -k1 * a1);
  ctx.set_rule(E2, Var::NA, -k2 * a2);

  // H <Phi,a> - alpha <N,a> vanishes identically on the surface.
  const RationalExpr identity = h * RationalExpr(Var::W) - alpha * RationalExpr(Var::NA);

  ProofReport report;
  report.theorem = 3;
  report.title = "constant mean curvature";
  try {
    report.add(check_equal("e1.identity", apply_derivation(identity, E1, ctx), (h + alpha * k1) * a1));
    report.add(check_equal("e2.identity", apply_derivation(identity, E2, ctx), (h + alpha * k2) * a2));
  } catch (const std::exception& e) {
    Checkpoint cp = check_zero("identity.aborted", RationalExpr(1L));
    cp.notes.push_back(e.what());
    report.add(std::move(cp));
  }
  report.finalize(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return report;
}

}  // namespace smlab::proof
