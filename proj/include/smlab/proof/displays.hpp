#pragma once

#include "smlab/algebra/rational_expr.hpp"

// Transcriptions of the closed forms the proof chains are checked against,
// written in the canonical text syntax (k1 = kappa1, u1 = e1(kappa1),
// u2 = e2(kappa1), w = <Phi,a>, g = gamma, mu = mu, d11/d12/d22 = second
// derivatives of kappa1).
namespace smlab::proof::displays {

using algebra::RationalExpr;

namespace constant_gauss {
RationalExpr kappa2();
RationalExpr mean_curvature();
RationalExpr omega1();
RationalExpr omega2();
RationalExpr gamma();
RationalExpr mu();
RationalExpr e1_of_hw_over_alpha();  // in terms of g
RationalExpr e2_of_hw_over_alpha();  // in terms of mu
RationalExpr e1_gamma_chain();       // with d11
RationalExpr e1_mu_chain();          // with d12
RationalExpr e2_mu_chain();          // with d22
RationalExpr e1_gamma_frame();       // in terms of mu
RationalExpr e1_mu_frame();          // in terms of g
RationalExpr e2_mu_frame();          // in terms of g
RationalExpr e11();
RationalExpr e12();
RationalExpr e22();
RationalExpr gauss_lhs();            // c (k1^2-c)^2 / k1^2
RationalExpr gauss_rhs();            // with d11, d22
RationalExpr p1();
RationalExpr q1();
RationalExpr r1();
RationalExpr p2();
RationalExpr q2();
RationalExpr r2();
RationalExpr determinant();
RationalExpr remainder_alpha_minus_2();
RationalExpr remainder_alpha_plus_2();
RationalExpr m1();
RationalExpr m2();
RationalExpr z1();
RationalExpr z2();
RationalExpr final_contradiction();
RationalExpr e1zero_u2_squared();
RationalExpr e1zero_e22_derivative();
RationalExpr e1zero_e22_substituted();
RationalExpr e1zero_quartic();
}  // namespace constant_gauss

namespace constant_principal {
RationalExpr gamma();
RationalExpr mu();
RationalExpr e2_mu_chain();          // with d22
RationalExpr e2_mu_frame();
RationalExpr e22();                  // with u2
RationalExpr gauss_rhs();            // with d22, equals c*k1
RationalExpr gauss_reduced();        // after inserting e22
RationalExpr alpha_minus_2();
RationalExpr u2_squared();
RationalExpr twice_e22_derivative();
RationalExpr final_quadratic();
}  // namespace constant_principal

}  // namespace smlab::proof::displays
