#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "smlab/catenary/catenary.hpp"
#include "smlab/surface/grid.hpp"

using namespace smlab::catenary;
using std::numbers::pi;

namespace {
const Vec3 kA = Vec3::UnitZ();
const Vec3 kV = Vec3::UnitY();

double max_cosh_error(const Trajectory& t) {
  double e = 0;
  for (const auto& s : t.states) e = std::max(e, std::abs(s.y - std::cosh(s.x)));
  return e;
}

double max_circle_error(const Trajectory& t) {
  double e = 0;
  for (const auto& s : t.states) e = std::max(e, std::abs(s.x * s.x + s.y * s.y - 1));
  return e;
}

// Over states with y >= y_floor; J = y^alpha cos(theta) amplifies round-off near y = 0 when alpha < 0.
double max_drift(const Trajectory& t, double y_floor = 0) {
  const double j0 = first_integral(t.states[t.origin], t.alpha);
  double e = 0;
  for (const auto& s : t.states)
    if (s.y >= y_floor) e = std::max(e, std::abs(first_integral(s, t.alpha) - j0));
  return e;
}

Trajectory run(double alpha, double y0, double step, double smax, double y_min = 1e-3) {
  return integrate({0, 0, y0, 0}, {alpha, step, smax, y_min});
}
}  // namespace

TEST_CASE("right-hand side") {
  for (double alpha : {-2.0, -1.0, 0.5, 3.0}) {
    const auto d = rhs({0, 0.3, 2.0, pi / 2}, alpha);
    CHECK(std::abs(d[2]) < 1e-15);
  }
  CHECK(rhs({0, 0, 1, 0}, 1)[2] == 1);
  CHECK(rhs({0, 0, 1, 0}, -1)[2] == -1);
  const auto d = rhs({0, 0, 2, pi / 3}, 3);
  CHECK(d[0] == doctest::Approx(0.5));
  CHECK(d[1] == doctest::Approx(std::sqrt(3) / 2));
  CHECK(d[2] == doctest::Approx(0.75));
  CHECK_THROWS_AS(rhs({0, 0, 0, 0}, 1), SingularBoundary);
  CHECK_THROWS_AS(rhs({0, 0, -1, 0}, 1), SingularBoundary);
}

TEST_CASE("first integral") {
  CHECK(first_integral({0, 0, 1, 0}, 1) == 1);
  CHECK(first_integral({0, 0, 3, 0}, -1) == doctest::Approx(1.0 / 3));
  CHECK(std::abs(first_integral({0, 0, 2, pi / 2}, 2)) < 1e-15);
  const double x = 0.8;
  CHECK(first_integral({0, x, std::cosh(x), std::atan(std::sinh(x))}, 1) == doctest::Approx(1));
  for (double s : {0.1, 0.7, 1.2}) {
    CHECK(first_integral({s, std::sin(s), std::cos(s), -s}, -1) == doctest::Approx(1 / std::cos(s) * std::cos(s)));
  }
}

TEST_CASE("catenary of the first kind matches cosh") {
  const auto t = run(1, 1, 1e-3, 2);
  CHECK(t.termination() == Termination::ReachedSmax);
  CHECK(t.states.size() == 4001);
  CHECK(t.states.front().s == -2);
  CHECK(t.states.back().s == 2);
  CHECK(max_cosh_error(t) < 1e-8);
  CHECK(max_drift(t) < 1e-10);
}

TEST_CASE("alpha = -1 gives circles centered on the boundary line") {
  const auto t = run(-1, 1, 1e-3, 2);
  CHECK(t.termination() == Termination::HitYMin);
  CHECK(t.states.back().s == doctest::Approx(pi / 2).epsilon(1e-3));
  CHECK(max_circle_error(t) < 1e-8);
  CHECK(max_drift(t, 0.1) < 1e-10);
}

TEST_CASE("trajectory bends into the boundary for alpha = -2") {
  const auto t = run(-2, 0.2, 1e-3, 10, 0.1);
  CHECK(t.termination() == Termination::HitYMin);
  CHECK(t.forward == Termination::HitYMin);
  for (const auto& s : t.states) CHECK(s.y >= 0.1);
  CHECK(t.states.size() < 20001);
}

TEST_CASE("states are uniformly spaced in arc length") {
  const auto t = run(2, 1, 0.01, 1.5);
  REQUIRE(t.states.size() == 301);
  CHECK(t.states[t.origin].s == 0);
  for (std::size_t i = 1; i < t.states.size(); ++i) {
    CHECK(t.states[i].s > t.states[i - 1].s);
    CHECK(t.states[i].s - t.states[i - 1].s == doctest::Approx(0.01).epsilon(1e-9));
  }
}

TEST_CASE("fourth-order convergence under step halving") {
  const double cosh_ratio = max_cosh_error(run(1, 1, 0.04, 2)) / max_cosh_error(run(1, 1, 0.02, 2));
  CHECK(cosh_ratio >= 12);
  CHECK(cosh_ratio <= 20);
  const double circle_ratio = max_circle_error(run(-1, 1, 0.04, 1.2)) / max_circle_error(run(-1, 1, 0.02, 1.2));
  CHECK(circle_ratio >= 12);
  CHECK(circle_ratio <= 20);
}

TEST_CASE("reflection symmetry") {
  for (double alpha : {1.0, -1.0, 2.0, -0.5}) {
    const auto t = run(alpha, 1.3, 1e-3, 1);
    REQUIRE(t.origin * 2 + 1 == t.states.size());
    for (std::size_t k = 1; k <= t.origin; ++k) {
      const auto& f = t.states[t.origin + k];
      const auto& b = t.states[t.origin - k];
      CHECK(std::abs(f.x + b.x) < 1e-12);
      CHECK(std::abs(f.y - b.y) < 1e-12);
      CHECK(std::abs(f.theta + b.theta) < 1e-12);
    }
  }
}

TEST_CASE("discrete curvature follows the equation to second order") {
  auto max_err = [](double step) {
    const auto t = run(1.5, 1, step, 1);
    double e = 0;
    for (std::size_t i = 1; i + 1 < t.states.size(); ++i) {
      const auto &p = t.states[i - 1], &q = t.states[i], &r = t.states[i + 1];
      const double ax = q.x - p.x, ay = q.y - p.y, bx = r.x - q.x, by = r.y - q.y;
      const double cx = r.x - p.x, cy = r.y - p.y;
      const double kappa = 2 * (ax * by - ay * bx) / (std::hypot(ax, ay) * std::hypot(bx, by) * std::hypot(cx, cy));
      e = std::max(e, std::abs(kappa - rhs(q, 1.5)[2]));
    }
    return e;
  };
  const double e1 = max_err(0.02), e2 = max_err(0.01);
  CHECK(e1 < 1e-3);
  CHECK(e1 / e2 == doctest::Approx(4).epsilon(0.15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run(0, 1, 1e-3, 1), ParameterError);
  CHECK_THROWS_AS(run(1, 1, 0, 1), ParameterError);
  CHECK_THROWS_AS(run(1, 1, 1e-3, -1), ParameterError);
  CHECK_THROWS_AS(run(1, 1, 1e-3, 1, 0), ParameterError);
  CHECK_THROWS_AS(run(1, 1e-4, 1e-3, 1), ParameterError);
}

TEST_CASE("dense output") {
  const auto t = run(1, 1, 0.01, 1);
  for (std::size_t i : {std::size_t{0}, t.origin, t.states.size() - 1}) {
    const auto st = interpolate(t, t.states[i].s);
    CHECK(st.x == doctest::Approx(t.states[i].x));
    CHECK(st.y == doctest::Approx(t.states[i].y));
  }
  for (double s : {-0.995, 0.123, 0.7777}) {
    const auto st = interpolate(t, s);
    CHECK(std::abs(st.y - std::cosh(st.x)) < 1e-8);
    CHECK(std::abs(std::sinh(std::asinh(std::tan(st.theta))) - std::sinh(st.x)) < 1e-7);
  }
  CHECK_THROWS_AS(interpolate(t, 1.5), ParameterError);
}

TEST_CASE("extruded cylindrical surfaces") {
  using smlab::surface::grid_report;
  SUBCASE("alpha = -1 extrudes to a circular cylinder") {
    const auto patch = to_extrusion(run(-1, 1, 1e-3, 1.2), kV, kA);
    const auto r = grid_report(patch, -1, kA, 40, 20);
    CHECK(r.max_abs_residual < 1e-6);
    CHECK(r.max_abs_K < 1e-10);
    CHECK(std::abs(r.min_H) == doctest::Approx(1).epsilon(1e-6));
  }
  SUBCASE("flat for every alpha") {
    for (double alpha : {1.0, -1.0, 2.0}) {
      const auto r = grid_report(to_extrusion(run(alpha, 1, 1e-3, 1.5), kV, kA), alpha, kA, 30, 10);
      CHECK(r.max_abs_K < 1e-10);
      CHECK(r.max_abs_residual < 1e-6);
    }
  }
  SUBCASE("direction constraints") {
    const auto t = run(1, 1, 1e-2, 1);
    CHECK_THROWS_AS(to_extrusion(t, kA, kA), ParameterError);
    CHECK_THROWS_AS(to_extrusion(t, Vec3(0, std::sqrt(0.99), 0.1), kA), ParameterError);
    CHECK_THROWS_AS(to_extrusion(t, Vec3(0, 2, 0), kA), ParameterError);
    CHECK_NOTHROW(to_extrusion(t, Vec3(0.6, 0.8, 0), kA));
  }
}

TEST_CASE("trajectory exports") {
  const auto t = run(1, 1, 0.5, 1);
  std::ostringstream csv;
  write_csv(csv, t);
  const std::string text = csv.str();
  CHECK(text.rfind("s,x,y,theta,J\n-1,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  const auto json = nlohmann::json::parse(to_json(t));
  CHECK(json["schema"] == "smlab.trajectory");
  CHECK(json["termination"] == "reached-smax");
  CHECK(json["polyline"].size() == 5);
  CHECK(to_json(t) == to_json(run(1, 1, 0.5, 1)));
}

TEST_CASE("trajectory CSV round trip") {
  const auto t = run(-1, 1, 0.01, 0.5);
  std::stringstream io;
  write_csv(io, t);
  const auto back = read_csv(io, -1);
  REQUIRE(back.states.size() == t.states.size());
  CHECK(back.step == doctest::Approx(0.01));
  CHECK(back.origin == t.origin);
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    CHECK(back.states[i].x == t.states[i].x);
    CHECK(back.states[i].theta == t.states[i].theta);
  }
  std::istringstream bad("x,y\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad, 1), ParameterError);
  std::istringstream short_file("s,x,y,theta,J\n0,0,1,0,1\n");
  CHECK_THROWS_AS(read_csv(short_file, 1), ParameterError);
}
