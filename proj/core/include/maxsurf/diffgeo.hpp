#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "maxsurf/immersions.hpp"

namespace maxsurf {

/// Central-difference steps scaled by max(1,|coord|). First derivatives use the
/// fourth-order five-point stencil at step first; second derivatives use the
/// three-point stencil at step second. With use_exact_jet, a chart that supplies
/// exact tangents uses them, and second derivatives difference those tangents.
struct FdSteps {
  double first = 1e-5;
  double second = 1e-4;
  bool use_exact_jet = true;
};

/// Central-difference jet of a chart at (x, y).
struct SurfaceJet {
  Coords p{};
  Coords px{}, py{};
  Coords pxx{}, pxy{}, pyy{};
};

SurfaceJet fd_jet(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});

struct FirstForm {
  double gxx = 0, gxy = 0, gyy = 0;
};

struct SecondForm {
  double hxx = 0, hxy = 0, hyy = 0;
};

/// Curvature data of a spacelike chart in H^3_1 at one point.
struct ShapeData {
  FirstForm g;
  SecondForm h;
  Vec4 normal{};
  double mean = 0;
  double sigma2 = 0;
  double k1 = 0, k2 = 0;
  std::complex<double> hopf;
};

FirstForm first_fundamental_form(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
FirstForm first_fundamental_form(Ambient a, const SurfaceJet& j);

SecondForm second_fundamental_form(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
ShapeData shape_h31(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
ShapeData shape_h31(const SurfaceJet& j);

double mean_curvature(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
double mean_curvature_h2xr(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
double mean_curvature_h2xr(const SurfaceJet& j);

/// theta(z) = <phi_z, N_z> for H31 charts; for H2xR charts the Hopf
/// differential of the H^2 factor, <F_z, F_z>.
std::complex<double> hopf_differential(const SurfaceChart& c, double x, double y, const FdSteps& steps = {});
std::complex<double> hopf_h2xr(const SurfaceJet& j);

/// Values on a regular grid, row-major with x varying fastest.
template <class T>
struct GridField {
  int nx = 0, ny = 0;
  double dx = 1, dy = 1;
  std::vector<T> values;

  const T& at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

/// max |d theta/dx + i d theta/dy| / 2 over interior nodes (central differences).
double cauchy_riemann_residual(const GridField<std::complex<double>>& theta);

/// K = -exp(-2u) Lap u with u = log(gxx)/2, fourth-order Laplacian with the
/// given outer step (shrunk to stay inside the domain).
double gauss_curvature(const SurfaceChart& c, double x, double y, double outer = 2e-2,
                       const FdSteps& steps = {});

struct Curve {
  std::function<std::array<double, 2>(double)> point;
  std::function<std::array<double, 2>(double)> velocity;
  double t0 = 0;
  double t1 = 1;
};

/// Length of a curve under the chart's finite-difference first fundamental form,
/// composite Gauss-Legendre with the given number of panels.
double curve_length(const SurfaceChart& c, const Curve& path, int panels = 64, const FdSteps& steps = {});

struct GridSpec {
  int nx = 61;
  int ny = 61;
  Rect bounds;
};

/// Default grid: 61 x 61 over the inner 90% of the chart's sampling bounds.
GridSpec default_grid(const SurfaceChart& c);

struct Tolerances {
  double on_manifold = 1e-10;
  double conformality = 1e-6;
  double conformal_factor = 1e-6;
  double mean_curvature = 1e-5;
  double hopf = 1e-6;
  double cauchy_riemann = 1e-5;
  double normal = 1e-9;
  double exact_jet = 1e-7;
};

struct CheckResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool passed = false;
};

struct VerificationReport {
  std::string chart;
  GridSpec grid;
  std::vector<CheckResult> checks;
  std::string notes;

  bool passed() const noexcept;
  const CheckResult* find(const std::string& name) const noexcept;
  void add(const std::string& name, double residual, double tolerance);

  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every check that applies to the chart's ambient. Never throws for a
/// failing check; throws ErrorKind::EmptyGrid for an empty grid.
VerificationReport run_suite(const SurfaceChart& c, const GridSpec& grid, const Tolerances& tol = {},
                             const FdSteps& steps = {});
std::vector<VerificationReport> run_suite(const std::vector<SurfaceChart>& charts,
                                          const Tolerances& tol = {}, const FdSteps& steps = {});

std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Grid node coordinate (inclusive corners).
double grid_coordinate(double lo, double hi, int n, int i) noexcept;

/// Evaluates fn(i, j) for every grid node, in parallel, storing results in row-major order.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace maxsurf
