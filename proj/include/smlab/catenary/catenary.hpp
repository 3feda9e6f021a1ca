#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smlab/surface/patch.hpp"

namespace smlab::catenary {

using surface::Vec3;

class CatenaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParameterError : public CatenaryError {
 public:
  using CatenaryError::CatenaryError;
};
class SingularBoundary : public CatenaryError {
 public:
  using CatenaryError::CatenaryError;
};

// Arc-length state of a planar curve in the (x, y) plane, y the height
// above the boundary line; theta is the tangent angle.
struct CatenaryState {
  double s = 0, x = 0, y = 1, theta = 0;
};

struct CatenaryParams {
  double alpha = 1;
  double step = 1e-3;
  double smax = 10;
  double y_min = 1e-3;
  void validate() const;
};

enum class Termination { ReachedSmax, HitYMin };
std::string_view name(Termination t);

struct Trajectory {
  double alpha = 0;
  double step = 0;
  std::vector<CatenaryState> states;  // increasing s, uniform spacing
  Termination forward = Termination::ReachedSmax;
  Termination backward = Termination::ReachedSmax;
  Termination termination() const;
  // Index of the initial state within states.
  std::size_t origin = 0;
};

// (x', y', theta') = (cos theta, sin theta, alpha cos theta / y).
std::array<double, 3> rhs(const CatenaryState& state, double alpha);

// Fixed-step RK4 in both directions from init up to |s - s0| = smax,
// stopping before any state with y < y_min.
Trajectory integrate(const CatenaryState& init, const CatenaryParams& params);

// y^alpha cos theta, conserved along solutions.
double first_integral(const CatenaryState& state, double alpha);

// Cubic Hermite dense output on (x, y, theta) using rhs as derivative data.
CatenaryState interpolate(const Trajectory& traj, double s);

// Cylindrical surface gamma(s) + t v, where the curve is embedded as
// x (a x v) + y a. Requires unit v, a with <v, a> = 0.
surface::SurfacePatch to_extrusion(const Trajectory& traj, const Vec3& v, const Vec3& a, double t0 = -1,
                                   double t1 = 1);

// Columns s,x,y,theta,J.
void write_csv(std::ostream& out, const Trajectory& traj);
// Reads the write_csv format back; the J column is ignored.
Trajectory read_csv(std::istream& in, double alpha);
std::string to_json(const Trajectory& traj);

}  // namespace smlab::catenary
