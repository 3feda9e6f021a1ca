#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "smlab/surface/grid.hpp"

using namespace smlab::surface;
using std::numbers::pi;

namespace {
const Vec3 kA = Vec3::UnitZ();

SurfacePatch unit_sphere() { return sphere(Vec3::Zero(), 1, {0, 2 * pi, 0, 1.5}); }
SurfacePatch unit_cylinder() { return cylinder(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitZ(), 1, {-1.5, 1.5, -1, 1}); }
SurfacePatch vertical_plane() { return plane(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitZ(), {-1, 1, 0.1, 2}); }

SurfacePatch paraboloid() {
  return SurfacePatch("paraboloid", {-1, 1, -1, 1}, [](double u, double v) {
    Jet2Vec3 j;
    j.value = Vec3(u, v, u * u + v * v);
    j.du = Vec3(1, 0, 2 * u);
    j.dv = Vec3(0, 1, 2 * v);
    j.duu = Vec3(0, 0, 2);
    j.dvv = Vec3(0, 0, 2);
    return j;
  });
}
}  // namespace

TEST_CASE("fundamental forms of standard charts") {
  SUBCASE("plane") {
    const auto f = fundamental_forms(plane(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), {0, 1, 0, 1}).jet(0.3, 0.4));
    CHECK(f.E == 1);
    CHECK(f.F == 0);
    CHECK(f.G == 1);
    CHECK(f.L == 0);
    CHECK(f.M == 0);
    CHECK(f.Nc == 0);
    CHECK(f.N.isApprox(Vec3::UnitZ()));
  }
  SUBCASE("unit sphere at the equator") {
    const auto f = fundamental_forms(unit_sphere().jet(0.7, 0));
    CHECK(f.E == doctest::Approx(1));
    CHECK(f.F == doctest::Approx(0));
    CHECK(f.G == doctest::Approx(1));
    CHECK(std::abs(f.L) == doctest::Approx(1));
    CHECK(std::abs(f.Nc) == doctest::Approx(1));
    CHECK(f.M == doctest::Approx(0));
  }
  SUBCASE("cylinder of radius 2") {
    const auto cyl = cylinder(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitZ(), 2, {-1, 1, -1, 1});
    const auto f = fundamental_forms(cyl.jet(0.2, 0.5));
    CHECK(f.E == doctest::Approx(4));
    CHECK(f.F == doctest::Approx(0));
    CHECK(f.G == doctest::Approx(1));
    CHECK(std::abs(f.L) == doctest::Approx(2));
    CHECK(f.M == doctest::Approx(0));
    CHECK(f.Nc == doctest::Approx(0));
  }
  SUBCASE("degenerate metric") {
    Jet2Vec3 j;
    j.du = Vec3::UnitX();
    j.dv = 2 * Vec3::UnitX();
    CHECK_THROWS_AS(fundamental_forms(j), DegenerateMetric);
  }
}

TEST_CASE("curvatures use the sum convention") {
  SUBCASE("sphere of radius r") {
    for (double r : {0.5, 1.0, 3.0}) {
      const auto s = curvature_at(sphere(Vec3(1, 2, 0), r, {0, 2 * pi, -1.4, 1.4}).jet(1.1, 0.3));
      CHECK(std::abs(s.H) == doctest::Approx(2 / r));
      CHECK(s.K == doctest::Approx(1 / (r * r)));
      CHECK(s.k1 == s.k2);
    }
  }
  SUBCASE("cylinder") {
    const auto s = curvature_at(unit_cylinder().jet(0.4, 0.2));
    CHECK(std::abs(s.K) < 1e-15);
    CHECK(std::abs(s.H) == doctest::Approx(1));
    CHECK(std::abs(s.k1 * s.k2) < 1e-15);
    CHECK(std::max(std::abs(s.k1), std::abs(s.k2)) == doctest::Approx(1));
  }
  SUBCASE("paraboloid vertex") {
    const auto s = curvature_at(paraboloid().jet(0, 0));
    CHECK(s.L == 2);
    CHECK(s.Nc == 2);
    CHECK(s.H == 4);
    CHECK(s.K == 4);
    CHECK(s.k1 == 2);
    CHECK(s.k2 == 2);
  }
  SUBCASE("negative discriminant") {
    FundamentalForms f;
    f.E = 1, f.G = -1, f.L = 1, f.M = 1, f.Nc = -1;
    CHECK_THROWS_AS(shape_data(f, Vec3::Zero()), NumericalInconsistency);
  }
}

TEST_CASE("curvature sample invariants on analytic patches") {
  for (const auto& patch : {unit_sphere(), unit_cylinder(), paraboloid(), sphere(Vec3(1, 2, 0), 2, {0, 6, 0.1, 1.2})}) {
    for (const auto& g : evaluate_grid(patch, 1, kA, 7, 9, Execution::Serial)) {
      const auto& s = g.curvature;
      const double scale = std::max(1.0, std::abs(s.K) + std::abs(s.H));
      CHECK(std::abs(s.k1 * s.k2 - s.K) <= 1e-12 * scale);
      CHECK(std::abs(s.k1 + s.k2 - s.H) <= 1e-12 * scale);
      CHECK(s.k1 >= s.k2);
      CHECK(std::abs(s.normal.norm() - 1) < 1e-14);
      const auto j = patch.jet(g.u, g.v);
      CHECK(std::abs(s.normal.dot(j.du)) < 1e-12);
      CHECK(std::abs(s.normal.dot(j.dv)) < 1e-12);
    }
  }
}

TEST_CASE("residual of the singular minimal surface equation") {
  SUBCASE("plane containing a vanishes for every alpha") {
    const auto s = curvature_at(vertical_plane().jet(0.3, 0.5));
    for (double alpha : {-2.0, -1.0, 1.0, 3.7}) CHECK(smr_residual(s, alpha, kA) == 0);
  }
  SUBCASE("sphere centered on the boundary plane") {
    const auto sph = unit_sphere();
    const auto s = curvature_at(sph.jet(0.4, 0.6));
    CHECK(std::abs(smr_residual(s, -2, kA)) < 1e-15);
    CHECK(std::abs(smr_residual(s, -1, kA)) == doctest::Approx(s.point.dot(kA)));
  }
  SUBCASE("halfspace violation") {
    const auto s = curvature_at(unit_sphere().jet(0.4, 0.6));
    CHECK_THROWS_AS((void)smr_residual(s, -s.point, -2, kA), HalfspaceViolation);
    CHECK_THROWS_AS((void)smr_residual(s, Vec3(1, 0, 0), -2, kA), HalfspaceViolation);
  }
}

TEST_CASE("orientation flip by swapping parameters") {
  const auto cyl_tilted = cylinder(Vec3(0, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), 1.5, {-1.2, 1.2, -1, 1});
  for (const auto& patch : {unit_sphere(), unit_cylinder(), vertical_plane(), paraboloid(), cyl_tilted}) {
    const auto flipped = patch.swapped();
    for (double alpha : {-2.0, 1.0}) {
      const auto g = evaluate_grid(patch, alpha, kA, 6, 5, Execution::Serial);
      const auto h = evaluate_grid(flipped, alpha, kA, 5, 6, Execution::Serial);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 5; ++j) {
          const auto& s = g[i * 5 + j];
          const auto& t = h[j * 6 + i];
          CHECK(t.curvature.K == doctest::Approx(s.curvature.K));
          CHECK(t.curvature.H == doctest::Approx(-s.curvature.H));
          CHECK(t.curvature.normal.isApprox(-s.curvature.normal));
          REQUIRE(s.valid == t.valid);
          if (s.valid) CHECK(std::abs(t.residual + s.residual) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("grid reports of the example catalog") {
  for (double alpha : {-2.0, -1.0, 1.0, 3.7}) {
    CHECK(grid_report(vertical_plane(), alpha, kA, 50, 50).max_abs_residual < 1e-12);
  }
  const auto sph = grid_report(unit_sphere(), -2, kA, 50, 50);
  CHECK(sph.max_abs_residual < 1e-9);
  CHECK(sph.halfspace_violations == 50);
  CHECK(sph.valid_samples == 2450);
  CHECK(grid_report(unit_cylinder(), -1, kA, 50, 50).max_abs_residual < 1e-9);
  CHECK(grid_report(unit_cylinder(), 1, kA, 50, 50).max_abs_residual >= 1);
  CHECK(grid_report(unit_sphere(), -1, kA, 50, 50).max_abs_residual > 0.5);

  const auto r = grid_report(unit_cylinder(), -1, kA, 10, 10);
  CHECK(r.max_K == doctest::Approx(0));
  CHECK(r.min_H == doctest::Approx(-1));
  CHECK(r.max_H == doctest::Approx(-1));
}

TEST_CASE("grid errors") {
  CHECK_THROWS_AS(grid_report(unit_sphere(), -2, kA, 1, 5), ParameterError);
  CHECK_THROWS_AS(grid_report(unit_sphere(), -2, Vec3(0, 0, 2), 5, 5), ParameterError);
  const auto lower = sphere(Vec3::Zero(), 1, {0, 6, -1.4, -0.1});
  CHECK_THROWS_AS(grid_report(lower, -2, kA, 5, 5), HalfspaceViolation);
  const auto through_pole = sphere(Vec3::Zero(), 1, {0, 6, 0.5, pi / 2});
  CHECK_THROWS_AS(grid_report(through_pole, -2, kA, 5, 5), DegenerateMetric);
}

TEST_CASE("parallel and serial grids agree exactly") {
  const auto patch = sphere(Vec3(0.5, -0.2, 0), 1.3, {0, 2 * pi, 0, 1.4});
  const auto a = evaluate_grid(patch, -1.5, kA, 37, 23, Execution::Parallel);
  const auto b = evaluate_grid(patch, -1.5, kA, 37, 23, Execution::Serial);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].residual == b[i].residual);
    CHECK(a[i].curvature.H == b[i].curvature.H);
  }
  CHECK(to_json(summarize("s", -1.5, kA, 37, 23, a)) == to_json(summarize("s", -1.5, kA, 37, 23, b)));
}

TEST_CASE("finite-difference oracle") {
  SUBCASE("plane is exact") {
    const auto p = plane(Vec3(1, 2, 3), Vec3::UnitX(), Vec3(0, 0.6, 0.8), {-1, 1, -1, 1});
    for (double h : {1e-1, 1e-3}) CHECK(jet_distance(fd_jet_oracle(p, 0.2, 0.1, h), p.jet(0.2, 0.1)) < 1e-9);
  }
  SUBCASE("second-order convergence") {
    for (const auto& patch : {unit_sphere(), unit_cylinder()}) {
      const double u = 0.7, v = 0.4;
      const auto exact = patch.jet(u, v);
      const double e1 = jet_distance(fd_jet_oracle(patch, u, v, 1e-3), exact);
      const double e2 = jet_distance(fd_jet_oracle(patch, u, v, 5e-4), exact);
      CHECK(e1 / e2 >= 3.5);
      CHECK(e1 / e2 <= 4.5);
    }
  }
  SUBCASE("invalid stencils") {
    CHECK_THROWS_AS(fd_jet_oracle(unit_sphere(), 0.5, 0.5, 0), ParameterError);
    CHECK_THROWS_AS(fd_jet_oracle(unit_sphere(), 0.5, 0.5, -1e-3), ParameterError);
    CHECK_THROWS_AS(fd_jet_oracle(unit_sphere(), 0.5, 0.0, 1e-3), ParameterError);
  }
}

TEST_CASE("patch construction checks parameters") {
  CHECK_NOTHROW(sphere(Vec3(3, -1, 0), 2, {0, 1, 0, 1}));
  CHECK_NOTHROW(cylinder(Vec3::Zero(), Vec3(0.6, 0.8, 0), Vec3::UnitZ(), 1, {0, 1, 0, 1}));
  CHECK_THROWS_AS(sphere(Vec3::Zero(), 0, {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(sphere(Vec3::Zero(), -1, {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(cylinder(Vec3::Zero(), Vec3(1, 1, 0), Vec3::UnitZ(), 1, {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(cylinder(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitX(), 1, {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(plane(Vec3::Zero(), Vec3::UnitX(), Vec3(2, 0, 0), {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(plane(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitX(), {0, 1, 0, 1}), ParameterError);
  CHECK_THROWS_AS(plane(Vec3::Zero(), Vec3::UnitX(), Vec3::UnitY(), {1, 0, 0, 1}), ParameterError);
  CHECK_THROWS_AS(unit_sphere().jet(7, 0.5), ParameterError);
}

TEST_CASE("exports") {
  const auto patch = unit_sphere();
  const auto samples = evaluate_grid(patch, -2, kA, 4, 3);
  std::ostringstream csv;
  write_csv(csv, samples);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "u,v,x,y,z,H,K,k1,k2,residual");
  int rows = 0, empty_residual = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.back() == ',') ++empty_residual;
  }
  CHECK(rows == 12);
  CHECK(empty_residual == 4);

  std::ostringstream obj;
  write_obj(obj, samples, 4, 3);
  const std::string text = obj.str();
  CHECK(std::count(text.begin(), text.end(), 'v') == 12);
  CHECK(std::count(text.begin(), text.end(), 'f') == 12);
  CHECK(text.find("f 1 4 5\nf 1 5 2\n") != std::string::npos);

  const auto json = nlohmann::json::parse(to_json(summarize(patch.name(), -2, kA, 4, 3, samples)));
  CHECK(json["schema"] == "smlab.grid-report");
  CHECK(json["patch"] == "sphere");
  CHECK(json["halfspace_violations"] == 4);
  CHECK(format_double(0.1) == "0.10000000000000001");
}
