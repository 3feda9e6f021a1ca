#pragma once

#include <vector>

#include "smlab/algebra/polynomial.hpp"

namespace smlab::algebra {

// Greatest common divisor in Q[vars], normalized to an integer primitive
// polynomial with positive leading coefficient (1 when coprime).
//
// Recursive content/primitive-part decomposition over a main variable with
// a subresultant pseudo-remainder sequence for the primitive parts.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content(const Polynomial& p, Var v);

// Subresultant-PRS gcd of two polynomials primitive with respect to v
// (both must involve v). Result is primitive with respect to v.
Polynomial subresultant_gcd(const Polynomial& a, const Polynomial& b, Var v);

}  // namespace smlab::algebra
