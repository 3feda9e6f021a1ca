#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "smlab/surface/patch.hpp"

namespace smlab::surface {

struct GridSample {
  double u = 0, v = 0;
  CurvatureSample curvature;
  bool valid = false;  // false when the point violates the halfspace condition
  double residual = 0;
};

struct GridReport {
  std::string patch;
  double alpha = 0;
  Vec3 a = Vec3::UnitZ();
  int nu = 0, nv = 0;
  std::size_t valid_samples = 0;
  std::size_t halfspace_violations = 0;
  double max_abs_residual = 0, mean_abs_residual = 0;
  double min_K = 0, max_K = 0, max_abs_K = 0;
  double min_H = 0, max_H = 0;
};

enum class Execution { Serial, Parallel };

// Uniform nu x nv grid over the patch domain, u-major order. The parallel
// path splits rows across OpenMP threads; results are identical.
std::vector<GridSample> evaluate_grid(const SurfacePatch& patch, double alpha, const Vec3& a, int nu, int nv,
                                      Execution exec = Execution::Parallel, const Tolerances& tol = {});

// Aggregates in grid order; throws GeometryError if no sample is valid.
GridReport summarize(const std::string& patch, double alpha, const Vec3& a, int nu, int nv,
                     const std::vector<GridSample>& samples);

GridReport grid_report(const SurfacePatch& patch, double alpha, const Vec3& a, int nu, int nv,
                       Execution exec = Execution::Parallel);

std::string to_json(const GridReport& report);
// Columns u,v,x,y,z,H,K,k1,k2,residual; residual empty for invalid samples.
void write_csv(std::ostream& out, const std::vector<GridSample>& samples);
// Vertices in grid order, each quad split along its (i,j)-(i+1,j+1) diagonal.
void write_obj(std::ostream& out, const std::vector<GridSample>& samples, int nu, int nv);

// Fixed 17-significant-digit formatting used by every text export.
std::string format_double(double x);

}  // namespace smlab::surface
