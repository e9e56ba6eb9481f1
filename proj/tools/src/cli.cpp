#include "maxsurf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "maxsurf/diffgeo.hpp"
#include "maxsurf/errors.hpp"
#include "maxsurf/immersions.hpp"
#include "maxsurf/report.hpp"
#include "maxsurf/sinh_gordon.hpp"

namespace maxsurf::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double energy = 0;
  bool has_energy = false;
  double v0 = 0;
  std::string grid;
  std::string bounds;
  std::string format;
  double h = 1e-5;
  std::string out;
  bool negated = false;
  bool disc = false;
  double t = -std::numbers::pi / 2;
  bool has_t = false;
  int samples = 101;
  bool fd_only = false;
  std::string family;
  std::vector<std::string> targets;
  std::vector<std::string> tolerances;
};

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

std::string energy_tag(double E) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", E);
  return buf;
}

GridSpec apply_grid_flags(GridSpec g, const Options& o) {
  if (!o.grid.empty() && !parse_grid(o.grid, g.nx, g.ny)) throw UsageError("--grid expects NXxNY, got '" + o.grid + "'");
  if (!o.bounds.empty()) {
    Rect& b = g.bounds;
    if (!parse_bounds(o.bounds, b.x0, b.x1, b.y0, b.y1))
      throw UsageError("--bounds expects x0:x1:y0:y1, got '" + o.bounds + "'");
  }
  return g;
}

FdSteps steps_from(const Options& o) {
  if (!(o.h > 0) || !std::isfinite(o.h)) throw UsageError("--h must be a positive step");
  FdSteps s;
  s.first = o.h;
  s.second = 10 * o.h;
  s.use_exact_jet = !o.fd_only;
  return s;
}

Tolerances tolerances_from(const Options& o) {
  Tolerances tol;
  for (const std::string& item : o.tolerances) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--tol value is not a number: '" + item + "'");
    }
    if (name == "on_manifold") tol.on_manifold = value;
    else if (name == "conformality") tol.conformality = value;
    else if (name == "conformal_factor") tol.conformal_factor = value;
    else if (name == "mean_curvature") tol.mean_curvature = value;
    else if (name == "hopf") tol.hopf = value;
    else if (name == "cauchy_riemann") tol.cauchy_riemann = value;
    else if (name == "normal") tol.normal = value;
    else if (name == "exact_jet") tol.exact_jet = value;
    else throw UsageError("unknown tolerance '" + name + "'");
  }
  return tol;
}

double require_energy(const Options& o, const std::string& what) {
  if (!o.has_energy) throw UsageError(what + " needs -E");
  return o.energy;
}

Interval solve_window(const SinhGordonSolution& s) {
  const Interval& I = s.interval;
  if (I.bounded()) return I.inner(0.9);
  if (std::isfinite(I.hi)) return {I.hi - 3.0, I.hi - 0.1};
  if (std::isfinite(I.lo)) return {I.lo + 0.1, I.lo + 3.0};
  return {-1.0, 1.0};
}

int cmd_solve(const Options& o, std::ostream& out) {
  const double E = require_energy(o, "solve");
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const SinhGordonSolution s = solve(E, o.v0, o.negated);
  Interval w = solve_window(s);
  if (!o.bounds.empty()) {
    double y0 = 0, y1 = 0;
    if (!parse_bounds(o.bounds, w.lo, w.hi, y0, y1)) throw UsageError("--bounds expects x0:x1:y0:y1");
  }
  std::ostringstream os;
  os << "# branch: " << to_string(s.branch) << '\n'
     << "# energy: " << format_double(s.energy) << '\n'
     << "# v0: " << format_double(s.v0) << '\n'
     << "# negated: " << (s.negated ? "true" : "false") << '\n'
     << "# lambda: " << format_double(s.lambda) << '\n'
     << "# mu: " << format_double(s.mu.mu()) << '\n'
     << "# a0: " << format_double(s.a0) << '\n'
     << "# interval: " << format_double(s.interval.lo) << ' ' << format_double(s.interval.hi) << '\n';
  if (s.energy < 0) {
    const Interval adm = admissible_interval(s);
    os << "# admissible: " << format_double(adm.lo) << ' ' << format_double(adm.hi) << '\n';
  }
  os << "x,v,v_prime\n";
  for (int i = 0; i < o.samples; ++i) {
    const double x = grid_coordinate(w.lo, w.hi, o.samples, i);
    os << format_double(x) << ',' << format_double(eval_v(s, x)) << ',' << format_double(eval_v_prime(s, x))
       << '\n';
  }
  write_output(o.out, os.str(), out);
  return kOk;
}

SurfaceChart family_chart(const Options& o) {
  if (o.family == "ads-max") return maximal_phi_E(solve(require_energy(o, "ads-max"), o.v0, o.negated));
  if (o.family == "h2xr-min") return minimal_Phi_E(solve(require_energy(o, "h2xr-min"), o.v0, o.negated));
  if (o.family == "cylinder") return hyperbolic_cylinder(o.t);
  if (o.family == "geodesic") return geodesic_chart();
  throw UsageError("unknown family '" + o.family + "'");
}

std::string render_mesh(const MeshGrid& m, const std::string& format) {
  if (format.empty() || format == "obj") return mesh_to_obj(m);
  if (format == "json") return mesh_to_json(m);
  if (format == "csv") return mesh_to_csv(m);
  throw UsageError("unknown format '" + format + "'");
}

int cmd_surface(const Options& o, std::ostream& out) {
  SurfaceChart chart = family_chart(o);
  const GridSpec g = apply_grid_flags(default_grid(chart), o);
  if (o.disc && chart.ambient == Ambient::H31) chart = modified_gauss_map(chart);
  const MeshGrid m = sample_mesh(chart, g, o.disc);
  write_output(o.out, render_mesh(m, o.format), out);
  return kOk;
}

int cmd_figures(const Options& o, std::ostream& out) {
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path("figures") : std::filesystem::path(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
  for (double E : figure_energies()) {
    const SurfaceChart chart = minimal_Phi_E(solve(E, figure_v0(E)));
    const MeshGrid m = sample_mesh(chart, apply_grid_flags(default_grid(chart), o), true);
    const std::string stem = "figure_E" + energy_tag(E);
    const std::filesystem::path mesh = dir / (stem + ".obj"), top = dir / (stem + "_top.csv");
    write_output(mesh.string(), mesh_to_obj(m), out);
    write_output(top.string(), mesh_top_view_csv(m), out);
    out << mesh.string() << '\n' << top.string() << '\n';
  }
  return kOk;
}

std::vector<SurfaceChart> verify_charts(const Options& o) {
  std::vector<std::string> targets = o.targets;
  if (targets.empty()) targets.push_back("all");
  std::vector<std::pair<double, double>> energies;
  if (o.has_energy) energies.emplace_back(o.energy, o.v0);
  else
    for (double E : figure_energies()) energies.emplace_back(E, figure_v0(E));
  const std::vector<double> ts = o.has_t ? std::vector<double>{o.t} : std::vector<double>{0.0, -std::numbers::pi / 2};

  auto wants = [&targets](const char* name) {
    for (const auto& t : targets)
      if (t == name || t == "all") return true;
    return false;
  };
  std::vector<SurfaceChart> charts;
  if (wants("geodesic")) charts.push_back(geodesic_chart());
  if (wants("cylinder"))
    for (double t : ts) charts.push_back(hyperbolic_cylinder(t));
  for (const auto& [E, v0] : energies) {
    const SinhGordonSolution s = solve(E, v0, o.negated);
    const SurfaceChart phi = maximal_phi_E(s);
    if (wants("ads-max")) charts.push_back(phi);
    if (wants("h2xr-min")) charts.push_back(minimal_Phi_E(s));
    if (wants("modified-gauss")) charts.push_back(modified_gauss_map(phi));
    if (wants("pair")) charts.push_back(pair_chart(phi, hyperbolic_cylinder(-std::numbers::pi / 2)));
  }
  return charts;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const FdSteps steps = steps_from(o);
  const Tolerances tol = tolerances_from(o);
  if (!o.format.empty() && o.format != "json" && o.format != "text")
    throw UsageError("verify writes text or json, not '" + o.format + "'");
  std::vector<VerificationReport> reports;
  for (const SurfaceChart& c : verify_charts(o))
    reports.push_back(run_suite(c, apply_grid_flags(default_grid(c), o), tol, steps));
  std::string doc;
  if (o.format == "json") {
    doc = reports_to_json(reports);
  } else {
    for (const auto& r : reports) doc += r.to_text() + "\n";
  }
  write_output(o.out, doc, out);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  return ok ? kOk : kVerificationFailed;
}

std::vector<std::string> normalize(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  out.reserve(args.size());
  for (const std::string& a : args) {
    if (a == "-v0") out.emplace_back("--v0");
    else if (a.rfind("-v0=", 0) == 0) out.push_back("--v0=" + a.substr(4));
    else out.push_back(a);
  }
  return out;
}

}  // namespace

bool parse_grid(const std::string& s, int& nx, int& ny) {
  int a = 0, b = 0;
  char sep = 0, extra = 0;
  if (std::sscanf(s.c_str(), "%d%c%d%c", &a, &sep, &b, &extra) != 3) return false;
  if ((sep != 'x' && sep != 'X') || a < 1 || b < 1) return false;
  nx = a;
  ny = b;
  return true;
}

bool parse_bounds(const std::string& s, double& x0, double& x1, double& y0, double& y1) {
  double v[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = s.find(':', pos);
    if ((i < 3) != (end != std::string::npos)) return false;
    const std::string part = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    try {
      std::size_t used = 0;
      v[i] = std::stod(part, &used);
      if (used != part.size() || !std::isfinite(v[i])) return false;
    } catch (const std::exception&) {
      return false;
    }
    pos = end + 1;
  }
  if (!(v[0] < v[1]) || !(v[2] < v[3])) return false;
  x0 = v[0];
  x1 = v[1];
  y0 = v[2];
  y1 = v[3];
  return true;
}

const std::vector<double>& figure_energies() {
  static const std::vector<double> e{4.0, 1.0, 0.1, -0.5, -1.0, -6.0};
  return e;
}

double figure_v0(double E) { return E < -1 ? 0.5 * std::acosh(-E) : 0.0; }

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maximal surfaces in anti-de Sitter space and minimal surfaces in H2xR", "maxsurf"};
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  auto* energy = app.add_option("-E,--energy", o.energy, "Energy E of the sinh-Gordon solution");
  app.add_option("--v0", o.v0, "Initial value v(0) (also accepted as -v0)");
  app.add_option("--grid", o.grid, "Sampling grid NXxNY");
  app.add_option("--bounds", o.bounds, "Parameter rectangle x0:x1:y0:y1");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"obj", "json", "csv", "text"}));
  app.add_option("--h", o.h, "First-derivative finite-difference step (second derivatives use 10h)");
  app.add_option("--out", o.out, "Output file (directory for figures); '-' or empty for stdout");
  app.add_flag("--negated", o.negated, "Use the negated solution -v");
  app.add_flag("--disc", o.disc, "Project H^2 factors to the Poincare disc (H31 families via the modified Gauss map)");
  auto* tflag = app.add_option("--t", o.t, "Cylinder parameter t");
  app.add_option("--samples", o.samples, "Number of samples for solve");
  app.add_flag("--fd-only", o.fd_only, "verify: finite-difference tangents even where exact tangents exist");
  app.add_option("--tol", o.tolerances, "verify: tolerance override name=value (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* solve_cmd = app.add_subcommand("solve", "Solve the sinh-Gordon ODE branch and sample v, v'");
  auto* surface_cmd = app.add_subcommand("surface", "Sample a surface family and export a mesh");
  surface_cmd->add_option("family", o.family, "ads-max | h2xr-min | cylinder | geodesic")
      ->required()
      ->check(CLI::IsMember({"ads-max", "h2xr-min", "cylinder", "geodesic"}));
  auto* figures_cmd = app.add_subcommand("figures", "Write the six disc-model figure meshes and top views");
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("targets", o.targets, "all | geodesic | cylinder | ads-max | h2xr-min | modified-gauss | pair")
      ->check(CLI::IsMember({"all", "geodesic", "cylinder", "ads-max", "h2xr-min", "modified-gauss", "pair"}));

  std::vector<std::string> args = normalize(raw);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::FileError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ParseError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kUsage;
  }
  o.has_energy = energy->count() > 0;
  o.has_t = tflag->count() > 0;

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out);
    if (surface_cmd->parsed()) return cmd_surface(o, out);
    if (figures_cmd->parsed()) return cmd_figures(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    err << "maxsurf: no command\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace maxsurf::cli
