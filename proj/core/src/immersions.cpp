#include "maxsurf/immersions.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <memory>
#include <map>
#include <mutex>
#include <numbers>

#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// G(x) = G(anchor) + integral from the anchor to x, with anchors base + n*step and
// the anchor taken on the base side of x. Anchor values are accumulated from the base,
// so every result depends only on x.
class GTable {
 public:
  GTable(SinhGordonSolution s, double base, const Interval& domain)
      : s_(std::move(s)), base_(base), step_(domain.bounded() ? domain.length() / 64 : 1.0 / 16) {}

  double operator()(double x) {
    const double q = (x - base_) / step_;
    const long n = static_cast<long>(std::trunc(q));
    const double a = anchor(n);
    return a + G_integral(s_, x, base_ + static_cast<double>(n) * step_);
  }

 private:
  double anchor(long n) {
    std::lock_guard lock(mutex_);
    if (auto it = anchors_.find(n); it != anchors_.end()) return it->second;
    const long dir = n > 0 ? 1 : -1;
    long m = 0;
    double g = 0;
    for (long i = dir; i != n + dir; i += dir) {
      if (auto it = anchors_.find(i); it != anchors_.end()) {
        m = i;
        g = it->second;
        continue;
      }
      g += G_integral(s_, base_ + static_cast<double>(i) * step_, base_ + static_cast<double>(m) * step_);
      m = i;
      anchors_.emplace(i, g);
    }
    return n == 0 ? 0.0 : g;
  }

  SinhGordonSolution s_;
  double base_;
  double step_;
  std::mutex mutex_;
  std::map<long, double> anchors_;
};

Interval phi_E_interval(const SinhGordonSolution& s) {
  if (s.energy == 0.0) raise(ErrorKind::Unsupported, "no immersion formula for E = 0");
  return s.energy > 0 ? s.interval : admissible_interval(s);
}

Rect phi_E_bounds(const Interval& xi) {
  Rect r;
  r.y0 = -1.0;
  r.y1 = 1.0;
  if (xi.bounded()) {
    r.x0 = xi.lo;
    r.x1 = xi.hi;
  } else if (std::isfinite(xi.hi)) {
    r.x0 = xi.hi - 3.0;
    r.x1 = xi.hi - 0.05;
  } else if (std::isfinite(xi.lo)) {
    r.x0 = xi.lo + 0.05;
    r.x1 = xi.lo + 3.0;
  } else {
    r.x0 = -1.0;
    r.x1 = 1.0;
  }
  return r;
}

void require_x(const Interval& xi, double x) {
  if (!xi.contains(x)) raise(ErrorKind::Domain, "x outside the admissible interval");
}

// Shared pieces of the phi_E / Phi_E formulas at a fixed x.
struct RadialData {
  double k, v, vp, ev, root, g, dg;
};

RadialData radial(const SinhGordonSolution& s, GTable& table, double x) {
  RadialData d;
  const double E = s.energy;
  d.k = std::sqrt(2 * std::abs(E));
  d.v = eval_v(s, x);
  d.vp = eval_v_prime(s, x);
  d.ev = std::exp(d.v);
  const double denom = 2 * E + d.ev * d.ev;
  d.root = std::sqrt(std::abs(denom));
  d.g = table(x);
  d.dg = 1.0 / denom;
  return d;
}

}  // namespace

const char* to_string(Ambient a) noexcept {
  switch (a) {
    case Ambient::H31: return "H31";
    case Ambient::H2xH2: return "H2xH2";
    case Ambient::H2xR: return "H2xR";
  }
  return "unknown";
}

int ambient_dimension(Ambient a) noexcept { return a == Ambient::H2xH2 ? 6 : 4; }

std::array<double, 6> ambient_metric(Ambient a) noexcept {
  switch (a) {
    case Ambient::H31: return {1, 1, -1, -1, 0, 0};
    case Ambient::H2xR: return {-1, 1, 1, 1, 0, 0};
    case Ambient::H2xH2: return {-1, 1, 1, -1, 1, 1};
  }
  return {};
}

double ambient_inner(Ambient a, const Coords& u, const Coords& v) noexcept {
  const auto m = ambient_metric(a);
  double s = 0.0;
  for (int i = 0; i < 6; ++i) s += m[i] * u[i] * v[i];
  return s;
}

bool Rect::bounded() const noexcept {
  return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(y0) && std::isfinite(y1);
}

Rect Rect::inner(double fraction) const noexcept {
  const double hx = 0.5 * fraction * (x1 - x0), hy = 0.5 * fraction * (y1 - y0);
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  return {cx - hx, cx + hx, cy - hy, cy + hy};
}

double quadric_residual(Ambient a, const Coords& p) noexcept {
  switch (a) {
    case Ambient::H31:
      return std::abs(inner4(as_vec4(p), as_vec4(p)) + 1.0);
    case Ambient::H2xR:
      return std::abs(inner3({p[0], p[1], p[2]}, {p[0], p[1], p[2]}) + 1.0);
    case Ambient::H2xH2: {
      const double r1 = std::abs(inner3({p[0], p[1], p[2]}, {p[0], p[1], p[2]}) + 1.0);
      const double r2 = std::abs(inner3({p[3], p[4], p[5]}, {p[3], p[4], p[5]}) + 1.0);
      return std::max(r1, r2);
    }
  }
  return 0.0;
}

Vec4 as_vec4(const Coords& c) noexcept { return {c[0], c[1], c[2], c[3]}; }

Coords from_vec4(const Vec4& v) noexcept { return {v[0], v[1], v[2], v[3], 0.0, 0.0}; }

PointH2xR as_h2xr(const Coords& c) noexcept { return {{c[0], c[1], c[2]}, c[3]}; }

Vec4 totally_geodesic_B(double u, double phi) {
  return {std::sinh(u) * std::cos(phi), std::sinh(u) * std::sin(phi), std::cosh(u), 0.0};
}

SurfaceChart geodesic_chart() {
  SurfaceChart c;
  c.label = "geodesic";
  c.ambient = Ambient::H31;
  c.domain = {-std::numeric_limits<double>::infinity(), 0.0,
              -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  c.bounds = {-2.0, -0.2, -1.5, 1.5};
  auto radius = [](double x) { return 2 * std::atanh(std::exp(x)); };
  c.eval = [radius](double x, double y) { return from_vec4(totally_geodesic_B(radius(x), y)); };
  c.jet = [radius](double x, double y) {
    const double u = radius(x), sh = std::sinh(u), ch = std::cosh(u);
    const double cy = std::cos(y), sy = std::sin(y);
    ChartJet j;
    j.p = from_vec4({sh * cy, sh * sy, ch, 0.0});
    j.px = from_vec4({sh * ch * cy, sh * ch * sy, sh * sh, 0.0});
    j.py = from_vec4({-sh * sy, sh * cy, 0.0, 0.0});
    return j;
  };
  c.conformal_factor = [radius](double x, double) {
    const double sh = std::sinh(radius(x));
    return sh * sh;
  };
  c.hopf = std::complex<double>(0.0, 0.0);
  return c;
}

Vec4 hyperbolic_cylinder_point(double t, double x, double y) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double a = (x + y) * c + (x - y) * s;
  const double b = (y - x) * c + (x + y) * s;
  const double r = 1.0 / kSqrt2;
  return {r * std::sinh(a), r * std::sinh(b), r * std::cosh(a), r * std::cosh(b)};
}

SurfaceChart hyperbolic_cylinder(double t) {
  SurfaceChart ch;
  char buf[64];
  std::snprintf(buf, sizeof buf, "cylinder(t=%.17g)", t);
  ch.label = buf;
  ch.ambient = Ambient::H31;
  ch.bounds = {-1.0, 1.0, -1.0, 1.0};
  ch.eval = [t](double x, double y) { return from_vec4(hyperbolic_cylinder_point(t, x, y)); };
  ch.jet = [t](double x, double y) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    const double a = (x + y) * c + (x - y) * s, b = (y - x) * c + (x + y) * s;
    const double ax = c + s, ay = c - s, bx = s - c, by = c + s;
    const double r = 1.0 / kSqrt2;
    const double sa = std::sinh(a), ca = std::cosh(a), sb = std::sinh(b), cb = std::cosh(b);
    ChartJet j;
    j.p = from_vec4({r * sa, r * sb, r * ca, r * cb});
    j.px = from_vec4({r * ca * ax, r * cb * bx, r * sa * ax, r * sb * bx});
    j.py = from_vec4({r * ca * ay, r * cb * by, r * sa * ay, r * sb * by});
    return j;
  };
  ch.conformal_factor = [](double, double) { return 1.0; };
  ch.hopf = std::complex<double>(0.0, 0.5) * std::polar(1.0, t);
  return ch;
}

SurfaceChart maximal_phi_E(const SinhGordonSolution& s) { return maximal_phi_E(s, default_G_base(s)); }

SurfaceChart maximal_phi_E(const SinhGordonSolution& s, double g_base) {
  const Interval xi = phi_E_interval(s);
  auto table = std::make_shared<GTable>(s, g_base, xi);
  SurfaceChart c;
  char buf[96];
  std::snprintf(buf, sizeof buf, "phi_E(E=%.17g,v0=%.17g%s)", s.energy, s.v0,
                s.negated ? ",negated" : "");
  c.label = buf;
  c.ambient = Ambient::H31;
  c.domain = {xi.lo, xi.hi, -std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity()};
  c.bounds = phi_E_bounds(xi);
  const bool positive = s.energy > 0;
  c.jet = [s, table, xi, positive](double x, double y) {
    require_x(xi, x);
    const RadialData d = radial(s, *table, x);
    const double k = d.k, inv = 1.0 / k;
    const double dev = d.vp * d.ev;
    ChartJet j;
    if (positive) {
      const double cy = std::cos(k * y), sy = std::sin(k * y);
      const double cg = std::cos(k * d.g), sg = std::sin(k * d.g);
      const double dR = d.ev * d.ev * d.vp / d.root;
      j.p = {inv * d.ev * cy, -inv * d.ev * sy, -inv * d.root * cg, -inv * d.root * sg, 0, 0};
      j.px = {inv * dev * cy, -inv * dev * sy, inv * (-dR * cg + d.root * sg * k * d.dg),
              inv * (-dR * sg - d.root * cg * k * d.dg), 0, 0};
      j.py = {-d.ev * sy, -d.ev * cy, 0, 0, 0, 0};
    } else {
      const double cy = std::cosh(k * y), sy = std::sinh(k * y);
      const double cg = std::cosh(k * d.g), sg = std::sinh(k * d.g);
      const double dS = -d.ev * d.ev * d.vp / d.root;
      j.p = {-inv * d.root * sg, inv * d.ev * sy, inv * d.ev * cy, inv * d.root * cg, 0, 0};
      j.px = {-inv * (dS * sg + d.root * cg * k * d.dg), inv * dev * sy, inv * dev * cy,
              inv * (dS * cg + d.root * sg * k * d.dg), 0, 0};
      j.py = {0, d.ev * cy, d.ev * sy, 0, 0, 0};
    }
    return j;
  };
  c.eval = [jet = c.jet](double x, double y) { return jet(x, y).p; };
  c.conformal_factor = [s](double x, double) { return std::exp(2 * eval_v(s, x)); };
  c.hopf = std::complex<double>(0.5, 0.0);
  return c;
}

SurfaceChart minimal_Phi_E(const SinhGordonSolution& s) { return minimal_Phi_E(s, default_G_base(s)); }

SurfaceChart minimal_Phi_E(const SinhGordonSolution& s, double g_base) {
  const Interval xi = phi_E_interval(s);
  auto table = std::make_shared<GTable>(s, g_base, xi);
  SurfaceChart c;
  char buf[96];
  std::snprintf(buf, sizeof buf, "Phi_E(E=%.17g,v0=%.17g%s)", s.energy, s.v0,
                s.negated ? ",negated" : "");
  c.label = buf;
  c.ambient = Ambient::H2xR;
  c.domain = {xi.lo, xi.hi, -std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity()};
  c.bounds = phi_E_bounds(xi);
  const bool positive = s.energy > 0;
  c.jet = [s, table, xi, positive](double x, double y) {
    require_x(xi, x);
    const RadialData d = radial(s, *table, x);
    const double k = d.k, a = k / d.ev, b = d.vp * d.ev, w = 1.0 / (d.root * k);
    const double vpp = 2 * std::sinh(2 * d.v);
    const double sgn = positive || 2 * s.energy + d.ev * d.ev > 0 ? 1.0 : -1.0;
    const double ax = -a * d.vp, bx = (vpp + d.vp * d.vp) * d.ev;
    const double wx = -w * sgn * d.ev * d.ev * d.vp / (d.root * d.root);
    const double ang = k * (y - d.g), ang_x = -k * d.dg;
    ChartJet j;
    // u and w below are the two rotating components and their angle derivatives
    double u, uw, ux, ua, z, zx, za;
    if (positive) {
      const double ca = std::cos(ang), sa = std::sin(ang);
      u = a * ca - b * sa;
      ux = ax * ca - bx * sa;
      ua = -a * sa - b * ca;
      z = a * sa + b * ca;
      zx = ax * sa + bx * ca;
      za = a * ca - b * sa;
    } else {
      const double ca = std::cosh(ang), sa = std::sinh(ang);
      u = a * ca - b * sa;
      ux = ax * ca - bx * sa;
      ua = a * sa - b * ca;
      z = -a * sa + b * ca;
      zx = -ax * sa + bx * ca;
      za = -a * ca + b * sa;
    }
    uw = w * u;
    const double u_x = wx * u + w * (ux + ua * ang_x), u_y = w * ua * k;
    const double z_x = wx * z + w * (zx + za * ang_x), z_y = w * za * k;
    const int iu = positive ? 1 : 0, ir = positive ? 0 : 1;
    j.p[ir] = d.vp / k;
    j.px[ir] = vpp / k;
    j.p[iu] = uw;
    j.px[iu] = u_x;
    j.py[iu] = u_y;
    j.p[2] = w * z;
    j.px[2] = z_x;
    j.py[2] = z_y;
    j.p[3] = kSqrt2 * (y - x);
    j.px[3] = -kSqrt2;
    j.py[3] = kSqrt2;
    return j;
  };
  c.eval = [jet = c.jet](double x, double y) { return jet(x, y).p; };
  c.conformal_factor = [s](double x, double) {
    const double ch = std::cosh(eval_v(s, x));
    return 4 * ch * ch;
  };
  c.hopf = std::complex<double>(0.0, -1.0);
  return c;
}

ChartJet tangent_jet(const SurfaceChart& c, double x, double y, double h) {
  if (c.jet) return c.jet(x, y);
  ChartJet j;
  j.p = c.eval(x, y);
  const double hx = h * std::max(1.0, std::abs(x)), hy = h * std::max(1.0, std::abs(y));
  const Coords xp = c.eval(x + hx, y), xm = c.eval(x - hx, y);
  const Coords yp = c.eval(x, y + hy), ym = c.eval(x, y - hy);
  for (int i = 0; i < 6; ++i) {
    j.px[i] = (xp[i] - xm[i]) / (2 * hx);
    j.py[i] = (yp[i] - ym[i]) / (2 * hy);
  }
  return j;
}

Vec4 unit_normal(const SurfaceChart& c, double x, double y, double h) {
  if (c.ambient != Ambient::H31) raise(ErrorKind::NotApplicable, "unit_normal needs an H31 chart");
  const double hx = h * std::max(1.0, std::abs(x)), hy = h * std::max(1.0, std::abs(y));
  if (!c.domain.contains(x - hx, y - hy) || !c.domain.contains(x + hx, y + hy))
    raise(ErrorKind::StencilOutOfDomain, "unit_normal: stencil leaves the chart domain");
  const Vec4 p = as_vec4(c.eval(x, y));
  const Vec4 xp = as_vec4(c.eval(x + hx, y)), xm = as_vec4(c.eval(x - hx, y));
  const Vec4 yp = as_vec4(c.eval(x, y + hy)), ym = as_vec4(c.eval(x, y - hy));
  Vec4 px, py;
  for (int i = 0; i < 4; ++i) {
    px[i] = (xp[i] - xm[i]) / (2 * hx);
    py[i] = (yp[i] - ym[i]) / (2 * hy);
  }
  const double gxx = inner4(px, px), gyy = inner4(py, py), gxy = inner4(px, py);
  const double det = gxx * gyy - gxy * gxy;
  if (!(gxx > 0 && gyy > 0 && det > 0) || (gxx + gyy) * (gxx + gyy) / det > 1e12)
    raise(ErrorKind::DegenerateTangent, "unit_normal: tangent Gram matrix is singular");
  return normal_h31(p, px, py);
}

GaussPair gauss_map_from_jet(const Vec4& p, const Vec4& px, const Vec4& py) {
  const double nx = std::sqrt(inner4(px, px));
  Vec4 e1, e2;
  for (int i = 0; i < 4; ++i) e1[i] = px[i] / nx;
  const double proj = inner4(py, e1);
  for (int i = 0; i < 4; ++i) e2[i] = py[i] - proj * e1[i];
  const double n2 = std::sqrt(inner4(e2, e2));
  for (double& v : e2) v /= n2;
  const Vec4 N = normal_h31(p, px, py);
  const Bivector tangent = wedge(e1, e2), normal = wedge(N, p);
  const double r = 1.0 / kSqrt2;
  auto upper = [](Vec3 q) {
    if (q[0] < 0) q = {-q[0], -q[1], -q[2]};
    return q;
  };
  GaussPair g;
  g.plus = upper(lambda_pm_coords(project(r * (tangent + normal), Side::Plus), Side::Plus));
  g.minus = upper(lambda_pm_coords(project(r * (tangent - normal), Side::Minus), Side::Minus));
  return g;
}

GaussPair gauss_map(const SurfaceChart& c, double x, double y) {
  if (c.ambient != Ambient::H31) raise(ErrorKind::NotApplicable, "gauss_map needs an H31 chart");
  const ChartJet j = tangent_jet(c, x, y);
  return gauss_map_from_jet(as_vec4(j.p), as_vec4(j.px), as_vec4(j.py));
}

Vec3 reflect_plus_to_minus(const Vec3& q) {
  Bivector b = from_lambda_pm_coords(q, Side::Plus);
  // e14, e24, e34 change sign under x4 -> -x4.
  b.c[2] = -b.c[2];
  b.c[4] = -b.c[4];
  b.c[5] = -b.c[5];
  return lambda_pm_coords(b, Side::Minus);
}

namespace {

void require_same_hopf(const SurfaceChart& a, const SurfaceChart& b) {
  if (!a.hopf || !b.hopf || std::abs(*a.hopf - *b.hopf) > 1e-8)
    raise(ErrorKind::HopfMismatch, "charts have different Hopf constants");
}

}  // namespace

GaussPair pair_gauss_map(const SurfaceChart& a, const SurfaceChart& b, double x, double y) {
  require_same_hopf(a, b);
  return {gauss_map(a, x, y).plus, gauss_map(b, x, y).minus};
}

SurfaceChart pair_chart(const SurfaceChart& a, const SurfaceChart& b) {
  require_same_hopf(a, b);
  if (a.ambient != Ambient::H31 || b.ambient != Ambient::H31)
    raise(ErrorKind::NotApplicable, "pair_chart needs H31 charts");
  SurfaceChart c;
  c.label = "pair(" + a.label + "," + b.label + ")";
  c.ambient = Ambient::H2xH2;
  c.domain = {std::max(a.domain.x0, b.domain.x0), std::min(a.domain.x1, b.domain.x1),
              std::max(a.domain.y0, b.domain.y0), std::min(a.domain.y1, b.domain.y1)};
  c.bounds = {std::max(a.bounds.x0, b.bounds.x0), std::min(a.bounds.x1, b.bounds.x1),
              std::max(a.bounds.y0, b.bounds.y0), std::min(a.bounds.y1, b.bounds.y1)};
  c.eval = [a, b](double x, double y) {
    const Vec3 p = gauss_map(a, x, y).plus, m = gauss_map(b, x, y).minus;
    return Coords{p[0], p[1], p[2], m[0], m[1], m[2]};
  };
  const double th2 = std::norm(*a.hopf);
  c.conformal_factor = [a, b, th2](double x, double y) {
    const double ga = a.conformal_factor(x, y), gb = b.conformal_factor(x, y);
    return ga + gb + 4 * th2 * (1 / ga + 1 / gb);
  };
  return c;
}

SurfaceChart modified_gauss_map(const SurfaceChart& c) {
  if (c.ambient != Ambient::H31) raise(ErrorKind::NotApplicable, "modified_gauss_map needs an H31 chart");
  if (!c.hopf || std::abs(std::abs(*c.hopf) - 0.5) > 1e-8)
    raise(ErrorKind::HopfMismatch, "modified_gauss_map needs a Hopf constant of modulus 1/2");
  // theta = (i/2) e^{it}
  const std::complex<double> phase = std::complex<double>(0.0, -2.0) * *c.hopf;
  const std::complex<double> half = std::sqrt(phase);
  SurfaceChart m;
  m.label = "modified_gauss(" + c.label + ")";
  m.ambient = Ambient::H2xR;
  m.domain = c.domain;
  m.bounds = c.bounds;
  m.eval = [c, half](double x, double y) {
    const Vec3 p = gauss_map(c, x, y).plus;
    const double t = 2 * (std::complex<double>(x, y) * half).imag();
    return Coords{p[0], p[1], p[2], t, 0, 0};
  };
  m.conformal_factor = [c](double x, double y) {
    const double g = c.conformal_factor(x, y);
    return g + 1 / g + 2;
  };
  m.hopf = phase;
  return m;
}

Vec4 screw_action_h31(double E, double theta, const Vec4& p) {
  if (E == 0) raise(ErrorKind::Unsupported, "screw action undefined for E = 0");
  if (E > 0) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * p[0] - s * p[1], s * p[0] + c * p[1], p[2], p[3]};
  }
  const double c = std::cosh(theta), s = std::sinh(theta);
  return {p[0], c * p[1] + s * p[2], s * p[1] + c * p[2], p[3]};
}

PointH2xR screw_action_h2xr(double E, double theta, const PointH2xR& q) {
  if (E == 0) raise(ErrorKind::Unsupported, "screw action undefined for E = 0");
  const Vec3& p = q.p;
  if (E > 0) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{p[0], c * p[1] - s * p[2], s * p[1] + c * p[2]}, q.t + theta / std::sqrt(E)};
  }
  const double c = std::cosh(theta), s = std::sinh(theta);
  return {{c * p[0] + s * p[2], p[1], s * p[0] + c * p[2]}, q.t - theta / std::sqrt(-E)};
}

}  // namespace maxsurf
