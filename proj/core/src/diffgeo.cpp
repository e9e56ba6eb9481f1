#include "maxsurf/diffgeo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "maxsurf/errors.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {

namespace {

double scaled(double h, double coord) { return h * std::max(1.0, std::abs(coord)); }

}  // namespace

double grid_coordinate(double lo, double hi, int n, int i) noexcept {
  if (n <= 1) return 0.5 * (lo + hi);
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 16);
  if (workers == 1 || count < 64) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

namespace {

// Tangents by the exact jet when allowed, else the five-point stencil at step h1.
void tangents(const SurfaceChart& c, double x, double y, double h1x, double h1y, const FdSteps& steps,
              SurfaceJet& j) {
  if (c.jet && steps.use_exact_jet) {
    const ChartJet here = c.jet(x, y);
    j.p = here.p;
    j.px = here.px;
    j.py = here.py;
    return;
  }
  j.p = c.eval(x, y);
  const Coords xp = c.eval(x + h1x, y), xm = c.eval(x - h1x, y);
  const Coords yp = c.eval(x, y + h1y), ym = c.eval(x, y - h1y);
  const Coords xpp = c.eval(x + 2 * h1x, y), xmm = c.eval(x - 2 * h1x, y);
  const Coords ypp = c.eval(x, y + 2 * h1y), ymm = c.eval(x, y - 2 * h1y);
  for (int i = 0; i < 6; ++i) {
    j.px[i] = (8 * (xp[i] - xm[i]) - (xpp[i] - xmm[i])) / (12 * h1x);
    j.py[i] = (8 * (yp[i] - ym[i]) - (ypp[i] - ymm[i])) / (12 * h1y);
  }
}

}  // namespace

SurfaceJet fd_jet(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  const double h1x = scaled(steps.first, x), h1y = scaled(steps.first, y);
  const double h2x = scaled(steps.second, x), h2y = scaled(steps.second, y);
  const double rx = std::max(2 * h1x, h2x), ry = std::max(2 * h1y, h2y);
  if (!c.domain.contains(x - rx, y - ry) || !c.domain.contains(x + rx, y + ry))
    raise(ErrorKind::StencilOutOfDomain, "finite-difference stencil leaves the chart domain");
  SurfaceJet j;
  tangents(c, x, y, h1x, h1y, steps, j);
  if (c.jet && steps.use_exact_jet) {
    // Second derivatives difference the exact tangents: roundoff O(eps/h) instead of O(eps/h^2).
    const ChartJet Xp = c.jet(x + h2x, y), Xm = c.jet(x - h2x, y);
    const ChartJet Yp = c.jet(x, y + h2y), Ym = c.jet(x, y - h2y);
    for (int i = 0; i < 6; ++i) {
      j.pxx[i] = (Xp.px[i] - Xm.px[i]) / (2 * h2x);
      j.pyy[i] = (Yp.py[i] - Ym.py[i]) / (2 * h2y);
      j.pxy[i] = 0.5 * ((Xp.py[i] - Xm.py[i]) / (2 * h2x) + (Yp.px[i] - Ym.px[i]) / (2 * h2y));
    }
    return j;
  }
  const Coords Xp = c.eval(x + h2x, y), Xm = c.eval(x - h2x, y);
  const Coords Yp = c.eval(x, y + h2y), Ym = c.eval(x, y - h2y);
  const Coords pp = c.eval(x + h2x, y + h2y), pm = c.eval(x + h2x, y - h2y);
  const Coords mp = c.eval(x - h2x, y + h2y), mm = c.eval(x - h2x, y - h2y);
  for (int i = 0; i < 6; ++i) {
    j.pxx[i] = (Xp[i] - 2 * j.p[i] + Xm[i]) / (h2x * h2x);
    j.pyy[i] = (Yp[i] - 2 * j.p[i] + Ym[i]) / (h2y * h2y);
    j.pxy[i] = (pp[i] - pm[i] - mp[i] + mm[i]) / (4 * h2x * h2y);
  }
  return j;
}

FirstForm first_fundamental_form(Ambient a, const SurfaceJet& j) {
  return {ambient_inner(a, j.px, j.px), ambient_inner(a, j.px, j.py), ambient_inner(a, j.py, j.py)};
}

FirstForm first_fundamental_form(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  const double hx = scaled(steps.first, x), hy = scaled(steps.first, y);
  if (!c.domain.contains(x - 2 * hx, y - 2 * hy) || !c.domain.contains(x + 2 * hx, y + 2 * hy))
    raise(ErrorKind::StencilOutOfDomain, "finite-difference stencil leaves the chart domain");
  SurfaceJet j;
  tangents(c, x, y, hx, hy, steps, j);
  return first_fundamental_form(c.ambient, j);
}

ShapeData shape_h31(const SurfaceJet& j) {
  ShapeData s;
  s.g = first_fundamental_form(Ambient::H31, j);
  const Vec4 p = as_vec4(j.p), px = as_vec4(j.px), py = as_vec4(j.py);
  s.normal = normal_h31(p, px, py);
  s.h = {inner4(as_vec4(j.pxx), s.normal), inner4(as_vec4(j.pxy), s.normal),
         inner4(as_vec4(j.pyy), s.normal)};
  const double det = s.g.gxx * s.g.gyy - s.g.gxy * s.g.gxy;
  // Shape operator A = g^{-1} h.
  const double a11 = (s.g.gyy * s.h.hxx - s.g.gxy * s.h.hxy) / det;
  const double a12 = (s.g.gyy * s.h.hxy - s.g.gxy * s.h.hyy) / det;
  const double a21 = (s.g.gxx * s.h.hxy - s.g.gxy * s.h.hxx) / det;
  const double a22 = (s.g.gxx * s.h.hyy - s.g.gxy * s.h.hxy) / det;
  s.mean = 0.5 * (a11 + a22);
  s.sigma2 = a11 * a11 + 2 * a12 * a21 + a22 * a22;
  const double disc = std::sqrt(std::max(0.0, 0.25 * (a11 - a22) * (a11 - a22) + a12 * a21));
  s.k1 = s.mean + disc;
  s.k2 = s.mean - disc;
  s.hopf = -0.25 * std::complex<double>(s.h.hxx - s.h.hyy, -2 * s.h.hxy);
  return s;
}

ShapeData shape_h31(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  if (c.ambient != Ambient::H31) raise(ErrorKind::NotApplicable, "shape_h31 needs an H31 chart");
  return shape_h31(fd_jet(c, x, y, steps));
}

SecondForm second_fundamental_form(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  return shape_h31(c, x, y, steps).h;
}

double mean_curvature(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  if (c.ambient == Ambient::H2xR) return mean_curvature_h2xr(c, x, y, steps);
  return shape_h31(c, x, y, steps).mean;
}

double mean_curvature_h2xr(const SurfaceJet& j) {
  constexpr std::array<double, 4> eta{-1.0, 1.0, 1.0, 1.0};
  const Vec4 px{j.px[0], j.px[1], j.px[2], j.px[3]};
  const Vec4 py{j.py[0], j.py[1], j.py[2], j.py[3]};
  const Vec4 xi{j.p[0], j.p[1], j.p[2], 0.0};
  Vec4 n;
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1.0;
    n[i] = eta[i] * det4(e, px, py, xi);
  }
  auto ip = [&eta](const Vec4& a, const Vec4& b) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += eta[i] * a[i] * b[i];
    return s;
  };
  const double nn = ip(n, n);
  if (!(nn > 0)) raise(ErrorKind::DegenerateTangent, "degenerate tangent plane in H2xR");
  for (double& v : n) v /= std::sqrt(nn);
  Vec4 lap{};
  for (int i = 0; i < 4; ++i) lap[i] = j.pxx[i] + j.pyy[i];
  const double along = ip({lap[0], lap[1], lap[2], 0.0}, xi);
  for (int i = 0; i < 3; ++i) lap[i] += along * xi[i];
  const double gsum = ip(px, px) + ip(py, py);
  return ip(lap, n) / gsum;
}

double mean_curvature_h2xr(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  if (c.ambient != Ambient::H2xR) raise(ErrorKind::NotApplicable, "mean_curvature_h2xr needs an H2xR chart");
  return mean_curvature_h2xr(fd_jet(c, x, y, steps));
}

std::complex<double> hopf_h2xr(const SurfaceJet& j) {
  const Vec3 fx{j.px[0], j.px[1], j.px[2]}, fy{j.py[0], j.py[1], j.py[2]};
  return 0.25 * std::complex<double>(inner3(fx, fx) - inner3(fy, fy), -2 * inner3(fx, fy));
}

std::complex<double> hopf_differential(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  switch (c.ambient) {
    case Ambient::H31: return shape_h31(c, x, y, steps).hopf;
    case Ambient::H2xR: return hopf_h2xr(fd_jet(c, x, y, steps));
    case Ambient::H2xH2: break;
  }
  raise(ErrorKind::NotApplicable, "no Hopf differential for H2xH2 charts");
}

double cauchy_riemann_residual(const GridField<std::complex<double>>& theta) {
  double worst = 0.0;
  for (int j = 1; j + 1 < theta.ny; ++j)
    for (int i = 1; i + 1 < theta.nx; ++i) {
      const auto tx = (theta.at(i + 1, j) - theta.at(i - 1, j)) / (2 * theta.dx);
      const auto ty = (theta.at(i, j + 1) - theta.at(i, j - 1)) / (2 * theta.dy);
      worst = std::max(worst, 0.5 * std::abs(tx + std::complex<double>(0, 1) * ty));
    }
  return worst;
}

double gauss_curvature(const SurfaceChart& c, double x, double y, double outer, const FdSteps& steps) {
  const double margin = 1.5 * scaled(steps.first, std::max(std::abs(x), std::abs(y)) + 1.0);
  const double room = std::min({x - c.domain.x0, c.domain.x1 - x, y - c.domain.y0, c.domain.y1 - y});
  const double step = std::min(outer, 0.49 * (room - margin));
  if (!(step > 0)) raise(ErrorKind::StencilOutOfDomain, "gauss_curvature: no room for the stencil");
  auto u = [&](double a, double b) { return 0.5 * std::log(first_fundamental_form(c, a, b, steps).gxx); };
  const double u0 = u(x, y);
  auto second = [&](double m2, double m1, double p1, double p2) {
    return (-m2 + 16 * m1 - 30 * u0 + 16 * p1 - p2) / (12 * step * step);
  };
  const double uxx = second(u(x - 2 * step, y), u(x - step, y), u(x + step, y), u(x + 2 * step, y));
  const double uyy = second(u(x, y - 2 * step), u(x, y - step), u(x, y + step), u(x, y + 2 * step));
  return -std::exp(-2 * u0) * (uxx + uyy);
}

double curve_length(const SurfaceChart& c, const Curve& path, int panels, const FdSteps& steps) {
  auto speed = [&](double t) {
    const auto p = path.point(t);
    const auto v = path.velocity(t);
    const FirstForm g = first_fundamental_form(c, p[0], p[1], steps);
    return std::sqrt(std::max(0.0, g.gxx * v[0] * v[0] + 2 * g.gxy * v[0] * v[1] + g.gyy * v[1] * v[1]));
  };
  return integrate_gauss_legendre(speed, path.t0, path.t1, panels);
}

GridSpec default_grid(const SurfaceChart& c) { return {61, 61, c.bounds.inner(0.9)}; }

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& r : checks)
    if (r.name == name) return &r;
  return nullptr;
}

void VerificationReport::add(const std::string& name, double residual, double tolerance) {
  for (auto& r : checks)
    if (r.name == name) {
      r.max_residual = std::max(r.max_residual, residual);
      r.passed = std::isfinite(r.max_residual) && r.max_residual <= tolerance;
      return;
    }
  checks.push_back({name, residual, tolerance, std::isfinite(residual) && residual <= tolerance});
}

namespace {

struct NodeResult {
  bool ok = false;
  std::string error;
  double manifold = 0, conformality = 0, factor = 0, mean = 0, normal = 0, jet = 0;
  std::complex<double> hopf;
};

NodeResult evaluate_node(const SurfaceChart& c, double x, double y, const FdSteps& steps) {
  NodeResult r;
  try {
    const SurfaceJet j = fd_jet(c, x, y, steps);
    r.manifold = quadric_residual(c.ambient, j.p);
    const FirstForm g = first_fundamental_form(c.ambient, j);
    r.conformality = std::max(std::abs(g.gxx - g.gyy), std::abs(g.gxy)) / g.gxx;
    const double declared = c.conformal_factor ? c.conformal_factor(x, y) : 0.5 * (g.gxx + g.gyy);
    r.factor = std::abs(0.5 * (g.gxx + g.gyy) - declared) / declared;
    if (c.jet) {
      FdSteps plain = steps;
      plain.use_exact_jet = false;
      const SurfaceJet fd = steps.use_exact_jet ? fd_jet(c, x, y, plain) : j;
      const ChartJet exact = c.jet(x, y);
      double diff = 0, scale = 0;
      for (int i = 0; i < 6; ++i) {
        diff = std::max({diff, std::abs(exact.px[i] - fd.px[i]), std::abs(exact.py[i] - fd.py[i])});
        scale = std::max({scale, std::abs(fd.px[i]), std::abs(fd.py[i])});
      }
      r.jet = diff / scale;
    }
    if (c.ambient == Ambient::H31) {
      const ShapeData s = shape_h31(j);
      r.mean = std::abs(s.mean);
      r.hopf = s.hopf;
      const Vec4 p = as_vec4(j.p), px = as_vec4(j.px), py = as_vec4(j.py);
      r.normal = std::max({std::abs(inner4(s.normal, px)) / std::sqrt(g.gxx),
                           std::abs(inner4(s.normal, py)) / std::sqrt(g.gyy),
                           std::abs(inner4(s.normal, p)), std::abs(inner4(s.normal, s.normal) + 1.0)});
    } else if (c.ambient == Ambient::H2xR) {
      r.mean = std::abs(mean_curvature_h2xr(j));
      r.hopf = hopf_h2xr(j);
    }
    r.ok = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

VerificationReport run_suite(const SurfaceChart& c, const GridSpec& grid, const Tolerances& tol,
                             const FdSteps& steps) {
  if (grid.nx < 1 || grid.ny < 1) raise(ErrorKind::EmptyGrid, "run_suite: grid has no nodes");
  const int count = grid.nx * grid.ny;
  std::vector<NodeResult> nodes(static_cast<std::size_t>(count));
  parallel_for(count, [&](int k) {
    const int i = k % grid.nx, j = k / grid.nx;
    const double x = grid_coordinate(grid.bounds.x0, grid.bounds.x1, grid.nx, i);
    const double y = grid_coordinate(grid.bounds.y0, grid.bounds.y1, grid.ny, j);
    nodes[static_cast<std::size_t>(k)] = evaluate_node(c, x, y, steps);
  });

  VerificationReport rep;
  rep.chart = c.label;
  rep.grid = grid;
  int failures = 0;
  std::string first_error;
  double manifold = 0, conf = 0, factor = 0, mean = 0, hopf = 0, normal = 0, jet = 0;
  for (const NodeResult& n : nodes) {
    if (!n.ok) {
      if (failures++ == 0) first_error = n.error;
      continue;
    }
    manifold = std::max(manifold, n.manifold);
    conf = std::max(conf, n.conformality);
    factor = std::max(factor, n.factor);
    mean = std::max(mean, n.mean);
    jet = std::max(jet, n.jet);
    normal = std::max(normal, n.normal);
    if (c.hopf) hopf = std::max(hopf, std::abs(n.hopf - *c.hopf));
  }
  rep.add("evaluation", failures, 0);
  if (failures > 0) rep.notes = "first evaluation error: " + first_error;
  rep.add("on_manifold", manifold, tol.on_manifold);
  rep.add("conformality", conf, tol.conformality);
  if (c.conformal_factor) rep.add("conformal_factor", factor, tol.conformal_factor);
  if (c.jet) rep.add("exact_jet", jet, tol.exact_jet);
  if (c.ambient == Ambient::H2xH2) return rep;
  rep.add("mean_curvature", mean, tol.mean_curvature);
  if (c.ambient == Ambient::H31) rep.add("normal", normal, tol.normal);
  if (c.hopf) rep.add("hopf", hopf, tol.hopf);
  if (grid.nx >= 3 && grid.ny >= 3 && failures == 0) {
    GridField<std::complex<double>> field;
    field.nx = grid.nx;
    field.ny = grid.ny;
    field.dx = (grid.bounds.x1 - grid.bounds.x0) / (grid.nx - 1);
    field.dy = (grid.bounds.y1 - grid.bounds.y0) / (grid.ny - 1);
    field.values.reserve(nodes.size());
    for (const NodeResult& n : nodes) field.values.push_back(n.hopf);
    rep.add("cauchy_riemann", cauchy_riemann_residual(field), tol.cauchy_riemann);
  }
  return rep;
}

std::vector<VerificationReport> run_suite(const std::vector<SurfaceChart>& charts, const Tolerances& tol,
                                          const FdSteps& steps) {
  std::vector<VerificationReport> out;
  out.reserve(charts.size());
  for (const auto& c : charts) out.push_back(run_suite(c, default_grid(c), tol, steps));
  return out;
}

}  // namespace maxsurf
