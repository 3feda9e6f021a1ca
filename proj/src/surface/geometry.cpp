#include "smlab/surface/geometry.hpp"

#include <cmath>
#include <sstream>

namespace smlab::surface {

FundamentalForms fundamental_forms(const Jet2Vec3& jet, const Tolerances& tol) {
  FundamentalForms f;
  f.E = jet.du.dot(jet.du);
  f.F = jet.du.dot(jet.dv);
  f.G = jet.dv.dot(jet.dv);
  const double det = f.E * f.G - f.F * f.F;
  if (!(det > tol.metric * (f.E + f.G) * (f.E + f.G))) {
    std::ostringstream msg;
    msg << "degenerate metric: EG - F^2 = " << det;
    throw DegenerateMetric(msg.str());
  }
  f.N = jet.du.cross(jet.dv).normalized();
  f.L = jet.duu.dot(f.N);
  f.M = jet.duv.dot(f.N);
  f.Nc = jet.dvv.dot(f.N);
  return f;
}

CurvatureSample shape_data(const FundamentalForms& f, const Vec3& point, const Tolerances& tol) {
  CurvatureSample s;
  s.point = point;
  s.normal = f.N;
  s.E = f.E, s.F = f.F, s.G = f.G, s.L = f.L, s.M = f.M, s.Nc = f.Nc;
  const double det = f.E * f.G - f.F * f.F;
  s.K = (f.L * f.Nc - f.M * f.M) / det;
  s.H = (f.G * f.L - 2 * f.F * f.M + f.E * f.Nc) / det;
  double disc = s.H * s.H - 4 * s.K;
  if (disc < 0) {
    if (disc < -tol.umbilic) {
      std::ostringstream msg;
      msg << "H^2 - 4K = " << disc << " is negative";
      throw NumericalInconsistency(msg.str());
    }
    disc = 0;
  }
  const double root = std::sqrt(disc);
  s.k1 = (s.H + root) / 2;
  s.k2 = (s.H - root) / 2;
  return s;
}

CurvatureSample curvature_at(const Jet2Vec3& jet, const Tolerances& tol) {
  return shape_data(fundamental_forms(jet, tol), jet.value, tol);
}

double smr_residual(const CurvatureSample& sample, const Vec3& pos, double alpha, const Vec3& a) {
  const double height = pos.dot(a);
  if (!(height > 0)) {
    std::ostringstream msg;
    msg << "point outside the open halfspace: <pos, a> = " << height;
    throw HalfspaceViolation(msg.str());
  }
  return sample.H * height - alpha * sample.normal.dot(a);
}

void require_unit(const Vec3& v, const std::string& what, double tol) {
  if (!(std::abs(v.norm() - 1) <= tol)) {
    std::ostringstream msg;
    msg << what << " must be a unit vector (norm " << v.norm() << ")";
    throw ParameterError(msg.str());
  }
}

}  // namespace smlab::surface
