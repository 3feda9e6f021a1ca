#include "smlab/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "smlab/catenary/catenary.hpp"
#include "smlab/proof/chains.hpp"
#include "smlab/surface/grid.hpp"

namespace smlab::cli {

using surface::Vec3;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Vec3 parse_vec3(const std::string& text, const std::string& what) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": expected three comma-separated numbers, got '" + text + "'");
    }
  }
  if (parts.size() != 3) throw UsageError(what + ": expected three comma-separated numbers, got '" + text + "'");
  return {parts[0], parts[1], parts[2]};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  f << content;
}

template <class Fn>
void write_stream(const std::string& path, Fn&& fn) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + path);
  fn(f);
}

struct PatchOptions {
  std::string kind = "sphere";
  double r = 1;
  std::string center = "0,0,0";
  std::string axis = "1,0,0";
  std::string d1 = "1,0,0";
  std::string d2 = "0,0,1";

  void add_to(CLI::App* sub) {
    sub->add_option("--patch", kind, "plane, sphere or cylinder")
        ->check(CLI::IsMember({"plane", "sphere", "cylinder"}))
        ->capture_default_str();
    sub->add_option("--r", r, "radius of sphere or cylinder")->capture_default_str();
    sub->add_option("--center", center, "sphere center, point on the cylinder axis, or plane origin")
        ->capture_default_str();
    sub->add_option("--axis", axis, "cylinder axis (unit)")->capture_default_str();
    sub->add_option("--d1", d1, "first plane direction (unit)")->capture_default_str();
    sub->add_option("--d2", d2, "second plane direction (unit)")->capture_default_str();
  }

  surface::SurfacePatch build(const Vec3& a) const {
    using std::numbers::pi;
    const Vec3 c = parse_vec3(center, "--center");
    if (kind == "plane") return surface::plane(c, parse_vec3(d1, "--d1"), parse_vec3(d2, "--d2"), {-1, 1, 0, 2});
    if (kind == "sphere") return surface::sphere(c, r, {0, 2 * pi, -1.5, 1.5});
    const Vec3 ax = parse_vec3(axis, "--axis");
    // reference direction: a made orthogonal to the axis, so u = 0 is the top line
    Vec3 e = a - a.dot(ax) * ax;
    if (e.norm() < 1e-12) e = ax.unitOrthogonal();
    return surface::cylinder(c, ax, e.normalized(), r, {-pi, pi, -1, 1});
  }
};

struct CatenaryOptions {
  double alpha = 0;
  double x0 = 0, y0 = 1, theta0 = 0;
  catenary::CatenaryParams params;

  void add_to(CLI::App* sub, double smax_default) {
    params.smax = smax_default;
    sub->add_option("--alpha", alpha, "energy exponent (nonzero)")->required();
    sub->add_option("--x0", x0, "initial x")->capture_default_str();
    sub->add_option("--y0", y0, "initial height above the boundary line")->capture_default_str();
    sub->add_option("--theta0", theta0, "initial tangent angle (radians)")->capture_default_str();
    sub->add_option("--step", params.step, "RK4 arc-length step")->capture_default_str();
    sub->add_option("--smax", params.smax, "arc length in each direction")->capture_default_str();
    sub->add_option("--y-min", params.y_min, "stop before the height drops below this")->capture_default_str();
  }

  catenary::Trajectory integrate() {
    params.alpha = alpha;
    try {
      return catenary::integrate({0, x0, y0, theta0}, params);
    } catch (const catenary::ParameterError& e) {
      throw UsageError(e.what());
    }
  }
};

int cmd_prove(std::optional<int> theorem, const std::string& report_path, bool timing, bool quiet,
              std::ostream& out) {
  std::vector<proof::ProofReport> reports;
  if (!theorem) {
    reports = proof::run_all();
  } else if (*theorem == 1) {
    reports.push_back(proof::run_theorem1_chain());
  } else if (*theorem == 2) {
    reports.push_back(proof::run_theorem2_chain());
  } else {
    reports.push_back(proof::run_theorem3_check());
  }
  if (!report_path.empty()) write_file(report_path, proof::render_json(reports, timing));
  if (!quiet) out << proof::render_text(reports);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return all ? kSuccess : kAssertionFailure;
}

// Replaces "--config FILE" by the file's key = value pairs, inserted right
// after the subcommand name so that later command-line flags win.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (!path) return args;

  const auto sub_pos = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind('-', 0) != 0; });
  if (sub_pos == args.end()) throw UsageError("--config needs a command");
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(*sub_pos);
  } catch (const CLI::OptionNotFound&) {
    throw UsageError("unknown command " + *sub_pos);
  }

  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file " + *path);
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(*path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw UsageError(*path + ":" + std::to_string(lineno) + ": unknown key '" + key + "' for " + sub->get_name());
    }
    if (opt->get_expected_max() == 0) {
      injected.push_back("--" + key + "=" + value);  // flag: true / false
    } else {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  args.insert(sub_pos + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular minimal surface lab: proof replication and numeric checks", "smlab"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // prove
  auto* prove = app.add_subcommand("prove", "replay the symbolic proof chains");
  std::optional<int> theorem;
  std::string report_path = "proof-report.json";
  bool timing = false, quiet = false;
  prove->add_option("--theorem", theorem, "run only this theorem (1, 2 or 3)")->check(CLI::Range(1, 3));
  prove->add_option("--report", report_path, "JSON report path (empty to skip)")->capture_default_str();
  prove->add_flag("--timing", timing, "include wall times in the JSON report");
  prove->add_flag("--quiet", quiet, "no per-checkpoint summary");

  // residual
  auto* residual = app.add_subcommand("residual", "evaluate the equation residual on a patch grid");
  PatchOptions res_patch;
  double res_alpha = 0, threshold = 1e-9;
  std::string res_a = "0,0,1", res_json = "residual-report.json", res_csv;
  int res_nu = 50, res_nv = 50;
  bool res_expect = false, res_serial = false;
  res_patch.add_to(residual);
  residual->add_option("--alpha", res_alpha, "energy exponent")->required();
  residual->add_option("--a", res_a, "unit direction a")->capture_default_str();
  residual->add_option("--nu", res_nu, "grid samples in u")->check(CLI::PositiveNumber)->capture_default_str();
  residual->add_option("--nv", res_nv, "grid samples in v")->check(CLI::PositiveNumber)->capture_default_str();
  residual->add_option("--threshold", threshold, "pass threshold on max |residual|")->capture_default_str();
  residual->add_option("--json", res_json, "grid report path (empty to skip)")->capture_default_str();
  residual->add_option("--csv", res_csv, "per-sample CSV path");
  residual->add_flag("--expect-pass", res_expect, "exit 1 unless max |residual| < threshold");
  residual->add_flag("--serial", res_serial, "use the serial grid evaluator");

  // catenary
  auto* cat = app.add_subcommand("catenary", "integrate the planar curve equation");
  CatenaryOptions cat_opts;
  std::string cat_csv = "catenary.csv", cat_json = "catenary.json";
  cat_opts.add_to(cat, 10);
  cat->add_option("--csv", cat_csv, "trajectory CSV path (empty to skip)")->capture_default_str();
  cat->add_option("--json", cat_json, "polyline JSON path (empty to skip)")->capture_default_str();

  // extrude
  auto* ext = app.add_subcommand("extrude", "extrude a trajectory into a cylindrical surface");
  CatenaryOptions ext_opts;
  std::string ext_v = "0,1,0", ext_a = "0,0,1", ext_obj = "extrusion.obj", ext_json = "extrusion-report.json";
  std::string ext_input, ext_csv;
  double t0 = -1, t1 = 1;
  int ext_nu = 200, ext_nv = 20;
  bool ext_expect = false;
  ext_opts.add_to(ext, 1.5);
  ext->add_option("--trajectory", ext_input, "trajectory CSV from the catenary command instead of integrating");
  ext->add_option("--v", ext_v, "unit extrusion direction, orthogonal to a")->capture_default_str();
  ext->add_option("--a", ext_a, "unit direction a")->capture_default_str();
  ext->add_option("--t0", t0, "extrusion parameter start")->capture_default_str();
  ext->add_option("--t1", t1, "extrusion parameter end")->capture_default_str();
  ext->add_option("--nu", ext_nu, "samples along the curve")->check(CLI::PositiveNumber)->capture_default_str();
  ext->add_option("--nv", ext_nv, "samples along v")->check(CLI::PositiveNumber)->capture_default_str();
  ext->add_option("--obj", ext_obj, "OBJ mesh path (empty to skip)")->capture_default_str();
  ext->add_option("--json", ext_json, "grid report path (empty to skip)")->capture_default_str();
  ext->add_option("--csv", ext_csv, "per-sample CSV path");
  ext->add_flag("--expect-pass", ext_expect, "exit 1 unless max|K| < 1e-10 and max|residual| < 1e-6");

  // curvature
  auto* curv = app.add_subcommand("curvature", "tabulate fundamental forms and curvatures");
  PatchOptions curv_patch;
  std::string curv_csv = "curvature.csv";
  int curv_nu = 20, curv_nv = 20;
  double fd_h = 1e-3;
  curv_patch.add_to(curv);
  curv->add_option("--nu", curv_nu, "grid samples in u")->check(CLI::PositiveNumber)->capture_default_str();
  curv->add_option("--nv", curv_nv, "grid samples in v")->check(CLI::PositiveNumber)->capture_default_str();
  curv->add_option("--fd-h", fd_h, "finite-difference step of the oracle")->capture_default_str();
  curv->add_option("--csv", curv_csv, "per-sample CSV path (empty to skip)")->capture_default_str();

  try {
    std::vector<std::string> args = expand_config(app, raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (prove->parsed()) return cmd_prove(theorem, report_path, timing, quiet, out);

    if (residual->parsed()) {
      const Vec3 a = parse_vec3(res_a, "--a");
      const auto patch = res_patch.build(a);
      const auto exec = res_serial ? surface::Execution::Serial : surface::Execution::Parallel;
      const auto samples = surface::evaluate_grid(patch, res_alpha, a, res_nu, res_nv, exec);
      const auto report = surface::summarize(patch.name(), res_alpha, a, res_nu, res_nv, samples);
      if (!res_json.empty()) write_file(res_json, surface::to_json(report));
      if (!res_csv.empty()) write_stream(res_csv, [&](std::ostream& f) { surface::write_csv(f, samples); });
      const bool pass = report.max_abs_residual < threshold;
      out << "patch " << report.patch << "  alpha " << surface::format_double(res_alpha) << "  valid "
          << report.valid_samples << "  skipped " << report.halfspace_violations << "  max|residual| "
          << surface::format_double(report.max_abs_residual) << "  " << (pass ? "PASS" : "FAIL") << '\n';
      return res_expect && !pass ? kAssertionFailure : kSuccess;
    }

    if (cat->parsed()) {
      const auto traj = cat_opts.integrate();
      if (!cat_csv.empty()) write_stream(cat_csv, [&](std::ostream& f) { catenary::write_csv(f, traj); });
      if (!cat_json.empty()) write_file(cat_json, catenary::to_json(traj));
      out << "alpha " << surface::format_double(traj.alpha) << "  states " << traj.states.size() << "  s in ["
          << surface::format_double(traj.states.front().s) << ", " << surface::format_double(traj.states.back().s)
          << "]  termination " << catenary::name(traj.termination()) << '\n';
      return kSuccess;
    }

    if (ext->parsed()) {
      catenary::Trajectory traj;
      if (ext_input.empty()) {
        traj = ext_opts.integrate();
      } else {
        if (ext_opts.alpha == 0) throw UsageError("alpha must be nonzero");
        std::ifstream in(ext_input);
        if (!in) throw UsageError("cannot read trajectory file " + ext_input);
        traj = catenary::read_csv(in, ext_opts.alpha);
      }
      const Vec3 a = parse_vec3(ext_a, "--a");
      const auto patch = catenary::to_extrusion(traj, parse_vec3(ext_v, "--v"), a, t0, t1);
      const auto samples = surface::evaluate_grid(patch, traj.alpha, a, ext_nu, ext_nv);
      const auto report = surface::summarize(patch.name(), traj.alpha, a, ext_nu, ext_nv, samples);
      if (!ext_obj.empty()) write_stream(ext_obj, [&](std::ostream& f) { surface::write_obj(f, samples, ext_nu, ext_nv); });
      if (!ext_json.empty()) write_file(ext_json, surface::to_json(report));
      if (!ext_csv.empty()) write_stream(ext_csv, [&](std::ostream& f) { surface::write_csv(f, samples); });
      const bool pass = report.max_abs_K < 1e-10 && report.max_abs_residual < 1e-6;
      out << "extrusion  alpha " << surface::format_double(traj.alpha) << "  max|K| "
          << surface::format_double(report.max_abs_K) << "  max|residual| "
          << surface::format_double(report.max_abs_residual) << "  " << (pass ? "PASS" : "FAIL") << '\n';
      return ext_expect && !pass ? kAssertionFailure : kSuccess;
    }

    if (curv->parsed()) {
      const auto patch = curv_patch.build(Vec3::UnitZ());
      const auto samples = surface::evaluate_grid(patch, 0, Vec3::UnitZ(), curv_nu, curv_nv);
      double max_dev = 0;
      std::ostringstream csv;
      csv << "u,v,E,F,G,L,M,N,H,K,k1,k2,fd_deviation\n";
      for (const auto& s : samples) {
        const auto& c = s.curvature;
        for (double x : {s.u, s.v, c.E, c.F, c.G, c.L, c.M, c.Nc, c.H, c.K, c.k1, c.k2}) {
          csv << surface::format_double(x) << ',';
        }
        const auto& d = patch.domain();
        if (d.contains(s.u - fd_h, s.v - fd_h, 0) && d.contains(s.u + fd_h, s.v + fd_h, 0)) {
          const double dev = surface::jet_distance(surface::fd_jet_oracle(patch, s.u, s.v, fd_h), patch.jet(s.u, s.v));
          max_dev = std::max(max_dev, dev);
          csv << surface::format_double(dev);
        }
        csv << '\n';
      }
      if (!curv_csv.empty()) write_file(curv_csv, csv.str());
      out << "patch " << patch.name() << "  samples " << samples.size() << "  max fd deviation "
          << surface::format_double(max_dev) << '\n';
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const surface::GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const catenary::CatenaryError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace smlab::cli
