#pragma once

#include <string>
#include <string_view>

#include "smlab/algebra/polynomial.hpp"

namespace smlab::algebra {

class RationalExpr;

// Deterministic rendering: terms in decreasing graded-lex order, explicit
// rational coefficients, e.g. "-3/2*alpha*k1^2 + c". Parsed back by
// RationalExpr::parse.
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const RationalExpr& e);

// Grammar: sums/products/quotients of integers, registered variable names
// and parenthesized subexpressions, with non-negative integer powers "^n".
// Throws AlgebraError on malformed input or unknown names.
RationalExpr parse_expression(std::string_view text);

}  // namespace smlab::algebra
