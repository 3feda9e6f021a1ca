#include "smlab/surface/patch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace smlab::surface {

bool Domain::contains(double u, double v, double slack) const {
  return u >= u0 - slack && u <= u1 + slack && v >= v0 - slack && v <= v1 + slack;
}

SurfacePatch::SurfacePatch(std::string name, Domain domain, Evaluator eval, std::map<std::string, double> metadata)
    : name_(std::move(name)), domain_(domain), eval_(std::move(eval)), metadata_(std::move(metadata)) {
  if (!(domain_.u0 < domain_.u1 && domain_.v0 < domain_.v1)) throw ParameterError("empty parameter domain");
}

Jet2Vec3 SurfacePatch::jet(double u, double v) const {
  if (!domain_.contains(u, v)) {
    std::ostringstream msg;
    msg << "(" << u << ", " << v << ") is outside the domain of " << name_;
    throw ParameterError(msg.str());
  }
  Jet2Vec3 j = eval_(u, v);
  if (!(j.du.cross(j.dv).norm() > 0)) throw DegenerateMetric(name_ + " is not immersed at the sample");
  return j;
}

SurfacePatch SurfacePatch::swapped() const {
  const Domain d{domain_.v0, domain_.v1, domain_.u0, domain_.u1};
  auto inner = eval_;
  return SurfacePatch(name_ + "-swapped", d,
                      [inner](double u, double v) {
                        const Jet2Vec3 j = inner(v, u);
                        return Jet2Vec3{j.value, j.dv, j.du, j.dvv, j.duv, j.duu};
                      },
                      metadata_);
}

SurfacePatch plane(const Vec3& origin, const Vec3& d1, const Vec3& d2, Domain domain) {
  require_unit(d1, "plane direction d1");
  require_unit(d2, "plane direction d2");
  if (!(d1.cross(d2).norm() > 1e-12)) throw ParameterError("plane directions are parallel");
  return SurfacePatch("plane", domain, [=](double u, double v) {
    Jet2Vec3 j;
    j.value = origin + u * d1 + v * d2;
    j.du = d1;
    j.dv = d2;
    return j;
  });
}

SurfacePatch sphere(const Vec3& center, double r, Domain domain) {
  if (!(r > 0)) throw ParameterError("sphere radius must be positive");
  return SurfacePatch(
      "sphere", domain,
      [=](double u, double v) {
        const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
        Jet2Vec3 j;
        j.value = center + r * Vec3(cv * cu, cv * su, sv);
        j.du = r * Vec3(-cv * su, cv * cu, 0);
        j.dv = r * Vec3(-sv * cu, -sv * su, cv);
        j.duu = r * Vec3(-cv * cu, -cv * su, 0);
        j.duv = r * Vec3(sv * su, -sv * cu, 0);
        j.dvv = r * Vec3(-cv * cu, -cv * su, -sv);
        return j;
      },
      {{"r", r}, {"cx", center.x()}, {"cy", center.y()}, {"cz", center.z()}});
}

SurfacePatch cylinder(const Vec3& p, const Vec3& axis, const Vec3& e, double r, Domain domain) {
  if (!(r > 0)) throw ParameterError("cylinder radius must be positive");
  require_unit(axis, "cylinder axis");
  require_unit(e, "cylinder reference direction");
  if (std::abs(axis.dot(e)) > 1e-12) throw ParameterError("cylinder reference direction must be orthogonal to the axis");
  const Vec3 f = axis.cross(e);
  return SurfacePatch("cylinder", domain,
                      [=](double u, double v) {
                        const Vec3 radial = std::cos(u) * e + std::sin(u) * f;
                        const Vec3 tangent = -std::sin(u) * e + std::cos(u) * f;
                        Jet2Vec3 j;
                        j.value = p + r * radial + v * axis;
                        j.du = r * tangent;
                        j.dv = axis;
                        j.duu = -r * radial;
                        return j;
                      },
                      {{"r", r}});
}

Jet2Vec3 fd_jet_oracle(const SurfacePatch& patch, double u, double v, double h) {
  if (!(h > 0)) throw ParameterError("finite-difference step must be positive");
  if (!patch.domain().contains(u - h, v - h, 0) || !patch.domain().contains(u + h, v + h, 0)) {
    throw ParameterError("finite-difference stencil leaves the domain");
  }
  auto at = [&](double du, double dv) { return patch.position(u + du, v + dv); };
  const Vec3 c = at(0, 0);
  const Vec3 up = at(h, 0), um = at(-h, 0), vp = at(0, h), vm = at(0, -h);
  Jet2Vec3 j;
  j.value = c;
  j.du = (up - um) / (2 * h);
  j.dv = (vp - vm) / (2 * h);
  j.duu = (up - 2 * c + um) / (h * h);
  j.dvv = (vp - 2 * c + vm) / (h * h);
  j.duv = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
  return j;
}

double jet_distance(const Jet2Vec3& a, const Jet2Vec3& b) {
  return std::max({(a.value - b.value).lpNorm<Eigen::Infinity>(), (a.du - b.du).lpNorm<Eigen::Infinity>(),
                   (a.dv - b.dv).lpNorm<Eigen::Infinity>(), (a.duu - b.duu).lpNorm<Eigen::Infinity>(),
                   (a.duv - b.duv).lpNorm<Eigen::Infinity>(), (a.dvv - b.dvv).lpNorm<Eigen::Infinity>()});
}

}  // namespace smlab::surface
