#include <chrono>

#include "smlab/algebra/solve.hpp"
#include "smlab/algebra/text.hpp"
#include "smlab/proof/chains.hpp"
#include "smlab/proof/displays.hpp"

namespace smlab::proof {

namespace d = displays::constant_principal;
using algebra::collect_quadratic;
using algebra::solve_linear;
using enum Derivation;

namespace {

const RationalExpr kAlpha{Var::Alpha};
const RationalExpr kC{Var::C};
const RationalExpr kK1{Var::K1};
const RationalExpr kU1{Var::U1};
const RationalExpr kU2{Var::U2};
const RationalExpr kW{Var::W};

DerivationContext build_context(const ChainOptions& options) {
  DerivationContext ctx;
  if (options.flip) ctx.flip_rule_sign(options.flip->op, options.flip->generator);
  ctx.add_constant(Var::Alpha);
  ctx.add_constant(Var::C);
  ctx.set_rule(E1, Var::K1, kU1);
  ctx.set_rule(E2, Var::K1, kU2);
  ctx.define("kappa2", kC);
  ctx.define("H", kK1 + kC);
  ctx.define("omega1", apply_derivation(kK1, E2, ctx) / (kK1 - kC));
  ctx.define("omega2", apply_derivation(kC, E1, ctx) / (kK1 - kC));
  return ctx;
}

class ConstantPrincipalChain {
 public:
  explicit ConstantPrincipalChain(const ChainOptions& options) : ctx_(build_context(options)) {
    registry_.add("alpha", kAlpha);
    registry_.add("c", kC);
    registry_.add("kappa1 - c", kK1 - kC);
    registry_.add("c + (1+alpha) kappa1", kC + (1L + kAlpha) * kK1);
    registry_.add("kappa1 + (1+alpha) c", kK1 + (1L + kAlpha) * kC);
  }

  std::vector<Checkpoint> derive_gamma_mu() {
    std::vector<Checkpoint> out;
    out.push_back(check_equal("b1.omega1", ctx_.defined("omega1"), algebra::parse_expression("u2/(k1 - c)")));
    out.push_back(check_zero("b1.omega2", ctx_.defined("omega2")));

    DerivationContext pre = ctx_;
    pre.set_rule(E1, Var::W, RationalExpr(Var::G));
    pre.set_rule(E2, Var::W, RationalExpr(Var::M));
    const RationalExpr g{Var::G}, m{Var::M};
    const RationalExpr gamma = solve_linear(frame_equation(pre, 5, g, m), Var::G);
    const RationalExpr mu = solve_linear(frame_equation(pre, 6, g, m), Var::M);
    out.push_back(check_equal("gm.gamma", gamma, d::gamma()));
    out.push_back(check_equal("gm.mu", mu, d::mu()));

    ctx_.define("gamma", gamma);
    ctx_.define("mu", mu);
    ctx_.set_rule(E1, Var::W, gamma);
    ctx_.set_rule(E2, Var::W, mu);
    ctx_.set_rule(E2, Var::U2, RationalExpr(Var::D22));
    return audited(std::move(out), registry_);
  }

  std::vector<Checkpoint> derive_e22() {
    std::vector<Checkpoint> out;
    const RationalExpr& gamma = ctx_.defined("gamma");
    const RationalExpr& mu = ctx_.defined("mu");
    const RationalExpr e2_mu = apply_derivation(mu, E2, ctx_);
    const RationalExpr eq4 = frame_equation(ctx_, 4, gamma, mu);
    out.push_back(check_equal("d4.e2_mu", e2_mu, d::e2_mu_chain()));
    out.push_back(check_equal("d5.e2_mu", e2_mu - eq4, d::e2_mu_frame()));
    e22_ = solve_linear(eq4, Var::D22);
    out.push_back(check_equal("E1.e22", e22_, d::e22()));
    out.push_back(check_zero("E1.w_free", e22_.partial(Var::W)));
    return audited(std::move(out), registry_);
  }

  std::vector<Checkpoint> insert_into_gauss() {
    std::vector<Checkpoint> out;
    const RationalExpr gauss = gauss_curvature_frame(ctx_);
    out.push_back(check_equal("f1.gauss", gauss, d::gauss_rhs()));
    inserted_ = (gauss - kC * kK1).substitute({{Var::D22, e22_}});
    out.push_back(check_up_to_factor("f1.inserted", inserted_, d::gauss_reduced(), registry_));
    return audited(std::move(out), registry_);
  }

  std::vector<Checkpoint> branch_alpha_minus_2() {
    const std::map<Var, RationalExpr> bind{{Var::Alpha, RationalExpr(-2L)}};
    const NonvanishingRegistry reg = registry_.substituted(bind);
    const RationalExpr reduced = inserted_.substitute(bind);
    std::vector<Checkpoint> out;
    out.push_back(check_zero("alpha=-2.u2_cancels", reduced.partial(Var::U2)));
    auto cp = check_up_to_factor("alpha=-2.relation", reduced, d::alpha_minus_2(), reg);
    if (!is_contradiction_polynomial(cp.expected)) {
      cp.passed = false;
      cp.notes.push_back("expected is not a nonconstant polynomial in kappa1 over Q(c)");
    }
    out.push_back(std::move(cp));
    return audited(std::move(out), reg);
  }

  std::vector<Checkpoint> final_contradiction() {
    NonvanishingRegistry reg = registry_;
    reg.add("alpha + 2", kAlpha + 2L);
    std::vector<Checkpoint> out;
    const auto parts = collect_quadratic(inserted_, {Var::U1, Var::U2});
    const RationalExpr u2_sq = -parts.rest / parts.coeff_b;
    out.push_back(check_equal("E2.u2_squared", u2_sq, d::u2_squared()));

    // e2(u2^2) = 2 u2 e22
    const RationalExpr twice_e22 = apply_derivation(u2_sq, E2, ctx_) / kU2;
    out.push_back(check_equal("E2.twice_e22", twice_e22, d::twice_e22_derivative()));

    const auto e22_parts = collect_quadratic(e22_, {Var::U1, Var::U2});
    const RationalExpr e22_on_z = e22_parts.coeff_b * u2_sq + e22_parts.rest;
    auto cp = check_up_to_factor("final.contradiction", twice_e22 / 2L - e22_on_z, d::final_quadratic(), reg);
    if (!is_contradiction_polynomial(cp.expected)) {
      cp.passed = false;
      cp.notes.push_back("expected is not a nonconstant polynomial in kappa1 over Q(alpha, c)");
    }
    out.push_back(std::move(cp));
    return audited(std::move(out), reg);
  }

  ProofReport run() {
    const auto start = std::chrono::steady_clock::now();
    ProofReport report;
    report.theorem = 2;
    report.title = "constant principal curvature";
    auto step = [&](const std::string& label, auto&& fn) {
      try {
        for (auto& cp : fn()) report.add(std::move(cp));
      } catch (const std::exception& e) {
        Checkpoint cp = check_zero(label + ".aborted", RationalExpr(1L));
        cp.notes.push_back(e.what());
        report.add(std::move(cp));
      }
    };
    step("gm", [&] { return derive_gamma_mu(); });
    step("E1", [&] { return derive_e22(); });
    step("f1", [&] { return insert_into_gauss(); });
    step("alpha=-2", [&] { return branch_alpha_minus_2(); });
    step("final", [&] { return final_contradiction(); });
    report.finalize(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return report;
  }

 private:
  static std::vector<Checkpoint> audited(std::vector<Checkpoint> cps, const NonvanishingRegistry& registry) {
    for (auto& cp : cps) audit_denominators(cp, registry);
    return cps;
  }

  DerivationContext ctx_;
  NonvanishingRegistry registry_;
  RationalExpr e22_;
  RationalExpr inserted_;
};

}  // namespace

ProofReport run_theorem2_chain(const ChainOptions& options) { return ConstantPrincipalChain(options).run(); }

}  // namespace smlab::proof
