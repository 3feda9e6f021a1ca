#include "smlab/proof/displays.hpp"

namespace smlab::proof::displays {

namespace {
RationalExpr P(std::string_view s) { return RationalExpr::parse(s); }
}  // namespace

namespace constant_gauss {

RationalExpr kappa2() { return P("c/k1"); }
RationalExpr mean_curvature() { return P("(k1^2 + c)/k1"); }
RationalExpr omega1() { return P("k1/(k1^2 - c)*u2"); }
RationalExpr omega2() { return P("-c/(k1*(k1^2 - c))*u1"); }

RationalExpr gamma() { return P("w*(c - k1^2)/(k1*(c + (1 + alpha)*k1^2))*u1"); }
RationalExpr mu() { return P("w*(c - k1^2)/(k1*(k1^2 + (1 + alpha)*c))*u2"); }

RationalExpr e1_of_hw_over_alpha() { return P("(k1^2 - c)/(alpha*k1^2)*w*u1 + g*(k1^2 + c)/(alpha*k1)"); }
RationalExpr e2_of_hw_over_alpha() { return P("(k1^2 - c)/(alpha*k1^2)*w*u2 + mu*(k1^2 + c)/(alpha*k1)"); }

RationalExpr e1_gamma_chain() {
  return P("w*(c - k1^2)/(k1*(c + (1 + alpha)*k1^2))*d11"
           " + w*(2 + alpha)*(k1^2 - 3*c)/(c + (1 + alpha)*k1^2)^2*u1^2");
}
RationalExpr e1_mu_chain() {
  return P("w*(c - k1^2)/(k1*(k1^2 + (1 + alpha)*c))*d12"
           " + w*(2 + alpha)*(c + k1^2)*(k1^2 - (3 + alpha)*c)"
           "   /((k1^2 + (1 + alpha)*c)^2*(c + (1 + alpha)*k1^2))*u1*u2");
}
RationalExpr e2_mu_chain() {
  return P("w*(c - k1^2)/(k1*(k1^2 + (1 + alpha)*c))*d22"
           " + w*(2*k1^4 - alpha*c^2 - (6 + alpha)*c*k1^2)/(k1^2*(k1^2 + (1 + alpha)*c)^2)*u2^2");
}

RationalExpr e1_gamma_frame() { return P("mu*k1/(k1^2 - c)*u2 + (k1^2 + c)/alpha*w"); }
RationalExpr e1_mu_frame() { return P("-g*k1/(k1^2 - c)*u2"); }
RationalExpr e2_mu_frame() { return P("c*g/(k1*(k1^2 - c))*u1 + (k1^2 + c)/(alpha*k1^2)*c*w"); }

RationalExpr e11() {
  return P("(alpha + 2)*k1*(k1^2 - 3*c)/((k1^2 - c)*((alpha + 1)*k1^2 + c))*u1^2"
           " + k1*((alpha + 1)*k1^2 + c)/((k1^2 - c)*(k1^2 + (1 + alpha)*c))*u2^2"
           " - k1*(k1^2 + c)*((alpha + 1)*k1^2 + c)/(alpha*(k1^2 - c))");
}
RationalExpr e12() {
  return P("(2*k1/(k1^2 + (1 + alpha)*c) + 3*k1/(c - k1^2) - 2*c/(k1*((alpha + 1)*k1^2 + c)) + 2/k1)*u1*u2");
}
RationalExpr e22() {
  return P("c*(k1^2 + (1 + alpha)*c)/(k1*(k1^2 - c)*((alpha + 1)*k1^2 + c))*u1^2"
           " + (-2*k1^4 + (alpha + 6)*k1^2*c + alpha*c^2)/(k1*(c - k1^2)*(k1^2 + (1 + alpha)*c))*u2^2"
           " - c*(k1^2 + c)*(k1^2 + (1 + alpha)*c)/(alpha*k1*(k1^2 - c))");
}

RationalExpr gauss_lhs() { return P("c*(k1^2 - c)^2/k1^2"); }
RationalExpr gauss_rhs() {
  return P("c*(k1^2 - c)/k1^3*d11 + (k1^2 - c)/k1*d22 - 3*c/k1^2*u1^2 - (2*k1^2 + c)/k1^2*u2^2");
}

RationalExpr p1() { return P("(alpha*k1^2 + (alpha + 4)*c)/((alpha + 1)*k1^2 + c)"); }
RationalExpr q1() { return P("((alpha + 4)*k1^2 + alpha*c)/(k1^2 + (1 + alpha)*c)"); }
RationalExpr r1() { return P("k1^4 + (k1^2 + c)^2/alpha + c^2"); }

RationalExpr p2() {
  return P("2*(alpha + 2)*k1*(alpha*k1^4 + (2 - 3*alpha)*k1^2*c - 2*(alpha + 5)*c^2)"
           "/((k1^2 - c)*((alpha + 1)*k1^2 + c)^2)");
}
RationalExpr q2() {
  return P("2*(alpha + 2)*k1*(2*(alpha + 1)*k1^6 + (alpha^2 - 3*alpha - 8)*k1^4*c"
           " - (3*alpha^2 + 12*alpha + 10)*k1^2*c^2 - alpha*(2*alpha + 3)*c^3)"
           "/((k1^2 - c)*(k1^2 + (alpha + 1)*c)^2*((alpha + 1)*k1^2 + c))");
}
// The last numerator term is c^2*k1: every term is homogeneous of degree 5.
RationalExpr r2() {
  return P("(2*(alpha + 2)*k1^5 - 8*(alpha + 1)*k1^3*c - 2*(alpha + 6)*c^2*k1)/(alpha*(k1^2 - c))");
}

RationalExpr determinant() { return P("(alpha^2 - 4)*k1*(k1^2 - c)^3"); }
RationalExpr remainder_alpha_minus_2() { return P("8*c*k1"); }
RationalExpr remainder_alpha_plus_2() { return P("8*c*k1*(-5*k1^4 + 6*k1^2*c + 15*c^2)"); }

RationalExpr m1() {
  return P("(alpha + 1)*(alpha^2 - 4)*k1^8 - (alpha*(alpha*(4*alpha + 11) + 16) + 12)*k1^6*c"
           " + (alpha*(alpha*(7*alpha + 13) + 4) - 12)*k1^4*c^2"
           " + (alpha*(alpha*(4*alpha*(alpha + 5) + 39) + 16) - 4)*k1^2*c^3"
           " + 2*alpha^2*(alpha + 1)*(alpha + 3)*c^4");
}
RationalExpr m2() {
  return P("-(alpha*(5*alpha + 8) + 4)*k1^4 + 2*(alpha*(alpha*(2*alpha + 5) - 4) - 4)*k1^2*c"
           " + (alpha*(alpha*(2*alpha + 15) + 24) - 4)*c^2");
}
RationalExpr z1() { return -m1() * P("((alpha + 1)*k1^2 + c)/(alpha^2*(alpha^2 - 4)*(k1^2 - c)^3)"); }
RationalExpr z2() { return m2() * P("c*(k1^2 + (1 + alpha)*c)^2/(alpha^2*(alpha^2 - 4)*(k1^2 - c)^3)"); }

RationalExpr final_contradiction() { return P("k1^2*(k1^2 + (1 + alpha)*c)*((alpha + 4)*k1^2 + alpha*c)"); }

RationalExpr e1zero_u2_squared() { return P("(k1^2 + c)*(k1^2 + (1 + alpha)*c)/alpha"); }
RationalExpr e1zero_e22_derivative() { return P("(2*k1^3 + (2 + alpha)*c*k1)/alpha"); }
RationalExpr e1zero_e22_substituted() {
  return P("(k1^2 + c)*(2*k1^4 - (alpha + 7)*k1^2*c - (2*alpha + 1)*c^2)/(alpha*k1*(k1^2 - c))");
}
RationalExpr e1zero_quartic() { return P("(2*alpha + 5)*k1^4 + 2*(alpha + 3)*k1^2*c + (2*alpha + 1)*c^2"); }

}  // namespace constant_gauss

namespace constant_principal {

RationalExpr gamma() { return P("-u1*w/(c + (1 + alpha)*k1)"); }
RationalExpr mu() { return P("-u2*w/(k1 + (1 + alpha)*c)"); }
RationalExpr e2_mu_chain() { return P("-w/(k1 + (1 + alpha)*c)*d22 + 2*w/((1 + alpha)*c + k1)^2*u2^2"); }
RationalExpr e2_mu_frame() { return P("c*w*(c + k1)/alpha"); }
RationalExpr e22() { return P("((alpha + 1)*c + k1)*(2*u2^2/((alpha + 1)*c + k1)^2 - c*(c + k1)/alpha)"); }
RationalExpr gauss_rhs() { return P("d22/(k1 - c) - 2*u2^2/(k1 - c)^2"); }
RationalExpr gauss_reduced() {
  return P("(c - k1)*(alpha*(c^2 + k1^2) + (c + k1)^2)/alpha - 2*(alpha + 2)*u2^2/((alpha + 1)*c + k1)");
}
RationalExpr alpha_minus_2() { return P("(c + k1)^2 - 2*(c^2 + k1^2)"); }
RationalExpr u2_squared() {
  return P("(c - k1)*((alpha + 1)*c + k1)*((alpha + 1)*c^2 + 2*c*k1 + (alpha + 1)*k1^2)/(2*alpha*(alpha + 2))");
}
RationalExpr twice_e22_derivative() {
  return P("((-alpha^2 + alpha + 2)*c^3 + 2*(alpha - 1)*alpha*c^2*k1 - 3*(alpha^2 + alpha + 2)*c*k1^2"
           " - 4*(alpha + 1)*k1^3)/(2*alpha*(alpha + 2))");
}
RationalExpr final_quadratic() { return P("-(alpha - 1)*k1^2 + 2*(alpha + 1)*c*k1 + (alpha + 1)*c^2"); }

}  // namespace constant_principal

}  // namespace smlab::proof::displays
