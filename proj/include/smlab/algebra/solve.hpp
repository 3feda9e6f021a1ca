#pragma once

#include <utility>

#include "smlab/algebra/rational_expr.hpp"

namespace smlab::algebra {

// Raised when an expression does not have the shape an operation expects
// (stray monomial, nonlinear unknown).
class StructuralError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Raised when a linear system has an identically vanishing determinant.
class DegenerateSystem : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct QuadraticParts {
  RationalExpr coeff_a;  // multiplies first^2
  RationalExpr coeff_b;  // multiplies second^2
  RationalExpr rest;
};

// Splits expr = A*x^2 + B*y^2 + R with A, B, R free of x and y.
QuadraticParts collect_quadratic(const RationalExpr& expr, std::pair<Var, Var> vars);

// Root of an equation of degree exactly one in unknown.
RationalExpr solve_linear(const RationalExpr& eq, Var unknown);

struct Solution2x2 {
  RationalExpr first;
  RationalExpr second;
  RationalExpr det;
};

// a1*x + b1*y + r1 = 0, a2*x + b2*y + r2 = 0 by Cramer's rule; det = a1*b2 - a2*b1.
Solution2x2 solve_2x2(const RationalExpr& a1, const RationalExpr& b1, const RationalExpr& r1,
                      const RationalExpr& a2, const RationalExpr& b2, const RationalExpr& r2);

// Same, reading the coefficients off two equations linear in the unknowns.
Solution2x2 solve_2x2(const RationalExpr& e1, const RationalExpr& e2, std::pair<Var, Var> unknowns);

}  // namespace smlab::algebra
