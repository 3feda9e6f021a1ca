#pragma once

#include <random>

#include "doctest.h"
#include <vector>

#include "smlab/algebra/rational_expr.hpp"

namespace smlab::testing {

// Small random polynomials/rational functions for algebraic property checks.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed, std::vector<algebra::Var> vars = {algebra::Var::Alpha, algebra::Var::C,
                                                                    algebra::Var::K1, algebra::Var::U1})
      : rng_(seed), vars_(std::move(vars)) {}

  algebra::Polynomial polynomial(unsigned max_degree = 4, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<unsigned> var_exp(0, max_degree);
    std::vector<algebra::Term> terms;
    const int n = nterms(rng_);
    for (int i = 0; i < n; ++i) {
      algebra::Monomial m;
      unsigned budget = var_exp(rng_);
      for (auto v : vars_) {
        if (budget == 0) break;
        std::uniform_int_distribution<unsigned> e(0, budget);
        unsigned k = e(rng_);
        budget -= k;
        m = m * algebra::Monomial::of(v, k);
      }
      terms.push_back({m, algebra::Rational(coef(rng_), den(rng_))});
    }
    return algebra::Polynomial::from_terms(std::move(terms));
  }

  algebra::Polynomial nonzero_polynomial(unsigned max_degree = 4, int max_terms = 4) {
    for (;;) {
      auto p = polynomial(max_degree, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  algebra::RationalExpr rational(unsigned max_degree = 3) {
    return algebra::RationalExpr(polynomial(max_degree), nonzero_polynomial(max_degree - 1, 3));
  }

  algebra::RationalExpr nonzero_rational(unsigned max_degree = 3) {
    return algebra::RationalExpr(nonzero_polynomial(max_degree), nonzero_polynomial(max_degree - 1, 3));
  }

 private:
  std::mt19937 rng_;
  std::vector<algebra::Var> vars_;
};

}  // namespace smlab::testing

namespace doctest {
template <>
struct StringMaker<smlab::algebra::RationalExpr> {
  static String convert(const smlab::algebra::RationalExpr& e) { return e.str().c_str(); }
};
}  // namespace doctest
