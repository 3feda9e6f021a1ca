#pragma once

#include <functional>
#include <map>
#include <string>

#include "smlab/surface/geometry.hpp"

namespace smlab::surface {

struct Domain {
  double u0 = 0, u1 = 1, v0 = 0, v1 = 1;
  bool contains(double u, double v, double slack = 1e-12) const;
};

// Immutable parametric surface with an analytic second-order jet.
class SurfacePatch {
 public:
  using Evaluator = std::function<Jet2Vec3(double, double)>;

  SurfacePatch(std::string name, Domain domain, Evaluator eval, std::map<std::string, double> metadata = {});

  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  const std::map<std::string, double>& metadata() const { return metadata_; }

  // Throws ParameterError outside the domain and DegenerateMetric where the
  // chart is not an immersion.
  Jet2Vec3 jet(double u, double v) const;
  Vec3 position(double u, double v) const { return jet(u, v).value; }

  // Same surface with u and v exchanged; reverses the chart normal.
  SurfacePatch swapped() const;

 private:
  std::string name_;
  Domain domain_;
  Evaluator eval_;
  std::map<std::string, double> metadata_;
};

// origin + u d1 + v d2, with d1, d2 unit and independent.
SurfacePatch plane(const Vec3& origin, const Vec3& d1, const Vec3& d2, Domain domain);

// center + r (cos v cos u, cos v sin u, sin v); u longitude, v latitude.
SurfacePatch sphere(const Vec3& center, double r, Domain domain);

// Circular cylinder: p + r (cos u e + sin u (d x e)) + v d with d the unit
// axis and e a unit vector orthogonal to it.
SurfacePatch cylinder(const Vec3& p, const Vec3& axis, const Vec3& e, double r, Domain domain);

// Central differences of the position map only; the stencil (u +- h,
// v +- h) must lie in the domain.
Jet2Vec3 fd_jet_oracle(const SurfacePatch& patch, double u, double v, double h);

// Max norm over all six jet components.
double jet_distance(const Jet2Vec3& a, const Jet2Vec3& b);

}  // namespace smlab::surface
