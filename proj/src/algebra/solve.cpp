#include "smlab/algebra/solve.hpp"

#include <string>

#include "smlab/algebra/text.hpp"

namespace smlab::algebra {

QuadraticParts collect_quadratic(const RationalExpr& expr, std::pair<Var, Var> vars) {
  const auto [x, y] = vars;
  if (expr.den().contains(x) || expr.den().contains(y)) {
    throw StructuralError("collect_quadratic: denominator depends on " + std::string(name(x)) + " or " +
                          std::string(name(y)));
  }
  std::vector<Term> a, b, r;
  for (const auto& [mono, coef] : expr.num().terms()) {
    const unsigned ex = mono.exponent(x);
    const unsigned ey = mono.exponent(y);
    if (ex == 0 && ey == 0) {
      r.push_back({mono, coef});
    } else if (ex == 2 && ey == 0) {
      a.push_back({mono.with_exponent(x, 0), coef});
    } else if (ex == 0 && ey == 2) {
      b.push_back({mono.with_exponent(y, 0), coef});
    } else {
      throw StructuralError("collect_quadratic: stray monomial " +
                            to_string(Monomial{{x, ex}, {y, ey}}) + " in " + expr.str());
    }
  }
  const Polynomial& den = expr.den();
  return {RationalExpr(Polynomial::from_terms(std::move(a)), den),
          RationalExpr(Polynomial::from_terms(std::move(b)), den),
          RationalExpr(Polynomial::from_terms(std::move(r)), den)};
}

RationalExpr solve_linear(const RationalExpr& eq, Var unknown) {
  if (eq.den().contains(unknown)) {
    throw StructuralError("solve_linear: denominator depends on " + std::string(name(unknown)));
  }
  const auto coeffs = eq.num().coefficients_in(unknown);
  if (coeffs.size() != 2) {
    throw StructuralError("solve_linear: equation has degree " + std::to_string(coeffs.size() - 1) + " in " +
                          std::string(name(unknown)));
  }
  return RationalExpr(-coeffs[0], coeffs[1]);
}

Solution2x2 solve_2x2(const RationalExpr& a1, const RationalExpr& b1, const RationalExpr& r1,
                      const RationalExpr& a2, const RationalExpr& b2, const RationalExpr& r2) {
  RationalExpr det = a1 * b2 - a2 * b1;
  if (det.is_zero()) throw DegenerateSystem("solve_2x2: determinant vanishes identically");
  return {(b1 * r2 - b2 * r1) / det, (a2 * r1 - a1 * r2) / det, det};
}

Solution2x2 solve_2x2(const RationalExpr& e1, const RationalExpr& e2, std::pair<Var, Var> unknowns) {
  const auto [x, y] = unknowns;
  auto coefficients = [&](const RationalExpr& e) {
    RationalExpr a = e.partial(x);
    RationalExpr b = e.partial(y);
    if (a.contains(x) || a.contains(y) || b.contains(x) || b.contains(y)) {
      throw StructuralError("solve_2x2: equation is not linear in the unknowns: " + e.str());
    }
    RationalExpr r = e.substitute({{x, RationalExpr(0L)}, {y, RationalExpr(0L)}});
    return std::tuple{a, b, r};
  };
  const auto [a1, b1, r1] = coefficients(e1);
  const auto [a2, b2, r2] = coefficients(e2);
  return solve_2x2(a1, b1, r1, a2, b2, r2);
}

}  // namespace smlab::algebra
