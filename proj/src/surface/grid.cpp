#include "smlab/surface/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>

#include "json.hpp"

namespace smlab::surface {

namespace {

GridSample evaluate_one(const SurfacePatch& patch, double u, double v, double alpha, const Vec3& a,
                        const Tolerances& tol) {
  GridSample s;
  s.u = u;
  s.v = v;
  s.curvature = curvature_at(patch.jet(u, v), tol);
  if (s.curvature.point.dot(a) > 0) {
    s.valid = true;
    s.residual = smr_residual(s.curvature, alpha, a);
  }
  return s;
}

double grid_coord(double lo, double hi, int i, int n) {
  return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
}

}  // namespace

std::vector<GridSample> evaluate_grid(const SurfacePatch& patch, double alpha, const Vec3& a, int nu, int nv,
                                      Execution exec, const Tolerances& tol) {
  if (nu < 2 || nv < 2) throw ParameterError("grid needs at least 2 x 2 samples");
  require_unit(a, "direction a");
  const Domain& d = patch.domain();
  std::vector<GridSample> out(static_cast<std::size_t>(nu) * nv);
  std::vector<std::exception_ptr> errors(nu);

  auto row = [&](int i) {
    try {
      const double u = grid_coord(d.u0, d.u1, i, nu);
      for (int j = 0; j < nv; ++j) {
        out[static_cast<std::size_t>(i) * nv + j] = evaluate_one(patch, u, grid_coord(d.v0, d.v1, j, nv), alpha, a, tol);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nu; ++i) row(i);
  } else {
    for (int i = 0; i < nu; ++i) row(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

GridReport summarize(const std::string& patch, double alpha, const Vec3& a, int nu, int nv,
                     const std::vector<GridSample>& samples) {
  GridReport r;
  r.patch = patch;
  r.alpha = alpha;
  r.a = a;
  r.nu = nu;
  r.nv = nv;
  constexpr double inf = std::numeric_limits<double>::infinity();
  r.min_K = r.min_H = inf;
  r.max_K = r.max_H = -inf;
  double sum = 0;
  for (const auto& s : samples) {
    if (!s.valid) {
      ++r.halfspace_violations;
      continue;
    }
    ++r.valid_samples;
    const double abs_res = std::abs(s.residual);
    r.max_abs_residual = std::max(r.max_abs_residual, abs_res);
    sum += abs_res;
    r.min_K = std::min(r.min_K, s.curvature.K);
    r.max_K = std::max(r.max_K, s.curvature.K);
    r.max_abs_K = std::max(r.max_abs_K, std::abs(s.curvature.K));
    r.min_H = std::min(r.min_H, s.curvature.H);
    r.max_H = std::max(r.max_H, s.curvature.H);
  }
  if (r.valid_samples == 0) throw HalfspaceViolation("no grid sample lies in the open halfspace <pos, a> > 0");
  r.mean_abs_residual = sum / static_cast<double>(r.valid_samples);
  return r;
}

GridReport grid_report(const SurfacePatch& patch, double alpha, const Vec3& a, int nu, int nv, Execution exec) {
  return summarize(patch.name(), alpha, a, nu, nv, evaluate_grid(patch, alpha, a, nu, nv, exec));
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const GridReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "smlab.grid-report";
  j["version"] = 1;
  j["patch"] = r.patch;
  j["alpha"] = r.alpha;
  j["a"] = {r.a.x(), r.a.y(), r.a.z()};
  j["grid"] = {r.nu, r.nv};
  j["valid_samples"] = r.valid_samples;
  j["halfspace_violations"] = r.halfspace_violations;
  j["max_abs_residual"] = r.max_abs_residual;
  j["mean_abs_residual"] = r.mean_abs_residual;
  j["min_K"] = r.min_K;
  j["max_K"] = r.max_K;
  j["max_abs_K"] = r.max_abs_K;
  j["min_H"] = r.min_H;
  j["max_H"] = r.max_H;
  return j.dump(2) + "\n";
}

void write_csv(std::ostream& out, const std::vector<GridSample>& samples) {
  out << "u,v,x,y,z,H,K,k1,k2,residual\n";
  for (const auto& s : samples) {
    const auto& c = s.curvature;
    out << format_double(s.u) << ',' << format_double(s.v) << ',' << format_double(c.point.x()) << ','
        << format_double(c.point.y()) << ',' << format_double(c.point.z()) << ',' << format_double(c.H) << ','
        << format_double(c.K) << ',' << format_double(c.k1) << ',' << format_double(c.k2) << ',';
    if (s.valid) out << format_double(s.residual);
    out << '\n';
  }
}

void write_obj(std::ostream& out, const std::vector<GridSample>& samples, int nu, int nv) {
  for (const auto& s : samples) {
    const Vec3& p = s.curvature.point;
    out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
  }
  auto idx = [nv](int i, int j) { return i * nv + j + 1; };
  for (int i = 0; i + 1 < nu; ++i) {
    for (int j = 0; j + 1 < nv; ++j) {
      out << "f " << idx(i, j) << ' ' << idx(i + 1, j) << ' ' << idx(i + 1, j + 1) << '\n';
      out << "f " << idx(i, j) << ' ' << idx(i + 1, j + 1) << ' ' << idx(i, j + 1) << '\n';
    }
  }
}

}  // namespace smlab::surface
