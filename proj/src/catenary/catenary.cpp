#include "smlab/catenary/catenary.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "smlab/surface/grid.hpp"

namespace smlab::catenary {

using surface::format_double;

void CatenaryParams::validate() const {
  if (alpha == 0 || !std::isfinite(alpha)) throw ParameterError("alpha must be a nonzero real");
  if (!(step > 0)) throw ParameterError("step must be positive");
  if (!(smax > 0)) throw ParameterError("smax must be positive");
  if (!(y_min > 0)) throw ParameterError("y_min must be positive");
}

std::string_view name(Termination t) { return t == Termination::ReachedSmax ? "reached-smax" : "hit-y-min"; }

Termination Trajectory::termination() const {
  return forward == Termination::HitYMin || backward == Termination::HitYMin ? Termination::HitYMin
                                                                            : Termination::ReachedSmax;
}

std::array<double, 3> rhs(const CatenaryState& st, double alpha) {
  if (!(st.y > 0)) {
    std::ostringstream msg;
    msg << "curve reached the boundary line: y = " << st.y;
    throw SingularBoundary(msg.str());
  }
  const double c = std::cos(st.theta);
  return {c, std::sin(st.theta), alpha * c / st.y};
}

double first_integral(const CatenaryState& st, double alpha) { return std::pow(st.y, alpha) * std::cos(st.theta); }

namespace {

CatenaryState shifted(const CatenaryState& st, const std::array<double, 3>& k, double h) {
  return {st.s + h, st.x + h * k[0], st.y + h * k[1], st.theta + h * k[2]};
}

CatenaryState rk4_step(const CatenaryState& st, double alpha, double h) {
  const auto k1 = rhs(st, alpha);
  const auto k2 = rhs(shifted(st, k1, h / 2), alpha);
  const auto k3 = rhs(shifted(st, k2, h / 2), alpha);
  const auto k4 = rhs(shifted(st, k3, h), alpha);
  CatenaryState next;
  next.x = st.x + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
  next.y = st.y + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
  next.theta = st.theta + h / 6 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2]);
  return next;
}

// Integrates in one direction; returns the states after init.
std::vector<CatenaryState> march(const CatenaryState& init, const CatenaryParams& p, double sign,
                                 Termination& reason) {
  const auto n = static_cast<long>(std::floor(p.smax / p.step + 1e-9));
  std::vector<CatenaryState> out;
  out.reserve(static_cast<std::size_t>(n));
  CatenaryState cur = init;
  reason = Termination::ReachedSmax;
  for (long k = 1; k <= n; ++k) {
    CatenaryState next;
    try {
      next = rk4_step(cur, p.alpha, sign * p.step);
    } catch (const SingularBoundary&) {
      reason = Termination::HitYMin;
      break;
    }
    if (!(next.y >= p.y_min)) {
      reason = Termination::HitYMin;
      break;
    }
    next.s = init.s + sign * static_cast<double>(k) * p.step;
    out.push_back(next);
    cur = next;
  }
  return out;
}

}  // namespace

Trajectory integrate(const CatenaryState& init, const CatenaryParams& params) {
  params.validate();
  if (!(init.y > params.y_min)) throw ParameterError("initial height must exceed y_min");
  Trajectory t;
  t.alpha = params.alpha;
  t.step = params.step;
  auto back = march(init, params, -1, t.backward);
  auto fwd = march(init, params, +1, t.forward);
  t.states.assign(back.rbegin(), back.rend());
  t.origin = t.states.size();
  t.states.push_back(init);
  t.states.insert(t.states.end(), fwd.begin(), fwd.end());
  return t;
}

CatenaryState interpolate(const Trajectory& traj, double s) {
  const auto& st = traj.states;
  if (st.empty()) throw ParameterError("empty trajectory");
  if (s < st.front().s - 1e-12 || s > st.back().s + 1e-12) throw ParameterError("arc length outside the trajectory");
  if (st.size() == 1) return st.front();
  auto k = static_cast<std::size_t>(std::floor((s - st.front().s) / traj.step));
  k = std::min(k, st.size() - 2);
  const CatenaryState& a = st[k];
  const CatenaryState& b = st[k + 1];
  const double h = b.s - a.s;
  const double t = std::clamp((s - a.s) / h, 0.0, 1.0);
  const auto da = rhs(a, traj.alpha), db = rhs(b, traj.alpha);
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  auto herm = [&](double fa, double fb, int i) { return h00 * fa + h10 * h * da[i] + h01 * fb + h11 * h * db[i]; };
  return {s, herm(a.x, b.x, 0), herm(a.y, b.y, 1), herm(a.theta, b.theta, 2)};
}

surface::SurfacePatch to_extrusion(const Trajectory& traj, const Vec3& v, const Vec3& a, double t0, double t1) {
  if (traj.states.size() < 2) throw ParameterError("trajectory needs at least two states");
  try {
    surface::require_unit(v, "extrusion direction v");
    surface::require_unit(a, "direction a");
  } catch (const surface::ParameterError& e) {
    throw ParameterError(e.what());
  }
  if (std::abs(v.dot(a)) > 1e-12) throw ParameterError("extrusion direction must be orthogonal to a");
  const Vec3 b = a.cross(v);
  const surface::Domain dom{traj.states.front().s, traj.states.back().s, t0, t1};
  const double alpha = traj.alpha;
  return surface::SurfacePatch(
      "extrusion", dom,
      [traj, v, a, b, alpha](double s, double t) {
        const CatenaryState st = interpolate(traj, s);
        const auto d = rhs(st, alpha);
        surface::Jet2Vec3 j;
        j.value = st.x * b + st.y * a + t * v;
        j.du = d[0] * b + d[1] * a;
        // d/ds (cos theta, sin theta) = theta' (-sin theta, cos theta)
        j.duu = d[2] * (-d[1] * b + d[0] * a);
        j.dv = v;
        return j;
      },
      {{"alpha", alpha}, {"step", traj.step}});
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  out << "s,x,y,theta,J\n";
  for (const auto& st : traj.states) {
    out << format_double(st.s) << ',' << format_double(st.x) << ',' << format_double(st.y) << ','
        << format_double(st.theta) << ',' << format_double(first_integral(st, traj.alpha)) << '\n';
  }
}

Trajectory read_csv(std::istream& in, double alpha) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("s,x,y,theta", 0) != 0) {
    throw ParameterError("trajectory file must start with the header s,x,y,theta,J");
  }
  Trajectory t;
  t.alpha = alpha;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    CatenaryState st;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(fields >> st.s >> c1 >> st.x >> c2 >> st.y >> c3 >> st.theta) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw ParameterError("malformed trajectory row: " + line);
    }
    if (!(st.y > 0)) throw ParameterError("trajectory row below the boundary line: " + line);
    t.states.push_back(st);
  }
  if (t.states.size() < 2) throw ParameterError("trajectory file needs at least two states");
  t.step = t.states[1].s - t.states[0].s;
  for (std::size_t i = 1; i < t.states.size(); ++i) {
    if (std::abs(t.states[i].s - t.states[i - 1].s - t.step) > 1e-9 * std::max(1.0, std::abs(t.states[i].s))) {
      throw ParameterError("trajectory file must have uniform arc-length spacing");
    }
  }
  if (!(t.step > 0)) throw ParameterError("trajectory arc length must increase");
  auto origin = std::find_if(t.states.begin(), t.states.end(), [](const CatenaryState& st) { return st.s >= 0; });
  t.origin = origin == t.states.end() ? 0 : static_cast<std::size_t>(origin - t.states.begin());
  return t;
}

std::string to_json(const Trajectory& traj) {
  nlohmann::ordered_json j;
  j["schema"] = "smlab.trajectory";
  j["version"] = 1;
  j["alpha"] = traj.alpha;
  j["step"] = traj.step;
  j["termination"] = name(traj.termination());
  j["termination_forward"] = name(traj.forward);
  j["termination_backward"] = name(traj.backward);
  auto& pts = j["polyline"] = nlohmann::ordered_json::array();
  for (const auto& st : traj.states) pts.push_back({st.x, st.y});
  auto& ss = j["s"] = nlohmann::ordered_json::array();
  for (const auto& st : traj.states) ss.push_back(st.s);
  return j.dump(2) + "\n";
}

}  // namespace smlab::catenary
