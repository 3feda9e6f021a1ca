#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <stdexcept>
#include <string>

namespace smlab::surface {

using Vec3 = Eigen::Vector3d;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParameterError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class DegenerateMetric : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class HalfspaceViolation : public GeometryError {
 public:
  using GeometryError::GeometryError;
};
class NumericalInconsistency : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Position of a parametric surface with first and second partials.
struct Jet2Vec3 {
  Vec3 value = Vec3::Zero();
  Vec3 du = Vec3::Zero();
  Vec3 dv = Vec3::Zero();
  Vec3 duu = Vec3::Zero();
  Vec3 duv = Vec3::Zero();
  Vec3 dvv = Vec3::Zero();
};

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double L = 0, M = 0, Nc = 0;
  Vec3 N = Vec3::Zero();
};

// H is the SUM of the principal curvatures (no factor 1/2).
struct CurvatureSample {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::Zero();
  double E = 0, F = 0, G = 0, L = 0, M = 0, Nc = 0;
  double H = 0, K = 0;
  double k1 = 0, k2 = 0;
};

struct Tolerances {
  double metric = 1e-14;   // EG - F^2 > metric * (E + G)^2
  double umbilic = 1e-10;  // H^2 - 4K clamped to 0 above -umbilic
};

// N = (du x dv) / |du x dv| of the given chart.
FundamentalForms fundamental_forms(const Jet2Vec3& jet, const Tolerances& tol = {});
CurvatureSample shape_data(const FundamentalForms& forms, const Vec3& point, const Tolerances& tol = {});
CurvatureSample curvature_at(const Jet2Vec3& jet, const Tolerances& tol = {});

// H <pos, a> - alpha <N, a>; requires <pos, a> > 0.
double smr_residual(const CurvatureSample& sample, const Vec3& pos, double alpha, const Vec3& a);
inline double smr_residual(const CurvatureSample& sample, double alpha, const Vec3& a) {
  return smr_residual(sample, sample.point, alpha, a);
}

// Throws ParameterError unless |v| = 1 within tol.
void require_unit(const Vec3& v, const std::string& what, double tol = 1e-12);

}  // namespace smlab::surface
