#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "../support/expect.hpp"
#include "maxsurf/immersions.hpp"

using namespace maxsurf;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double h2_residual(const Vec3& q) { return std::abs(inner3(q, q) + 1.0); }

double dist(const Vec3& a, const Vec3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double dist(const Vec4& a, const Vec4& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Central-difference tangents of a chart, independent of the library's jets.
std::pair<Coords, Coords> fd_tangents(const SurfaceChart& c, double x, double y, double h = 1e-5) {
  const Coords xp = c(x + h, y), xm = c(x - h, y), yp = c(x, y + h), ym = c(x, y - h);
  Coords px{}, py{};
  for (int i = 0; i < 6; ++i) {
    px[i] = (xp[i] - xm[i]) / (2 * h);
    py[i] = (yp[i] - ym[i]) / (2 * h);
  }
  return {px, py};
}

std::vector<std::pair<double, double>> sample(const Rect& r, int n) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pts.emplace_back(r.x0 + (r.x1 - r.x0) * (i + 0.5) / n, r.y0 + (r.y1 - r.y0) * (j + 0.5) / n);
  return pts;
}

double v0_for(double E) { return E < -1 ? 0.5 * std::acosh(-E) : 0.0; }

const double kEnergies[] = {4, 1, 0.1, -0.5, -1, -6};

}  // namespace

TEST_CASE("totally geodesic plane") {
  const Vec4 o = totally_geodesic_B(0, 0);
  CHECK(dist(o, Vec4{0, 0, 1, 0}) == 0);
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    const Vec4 p = totally_geodesic_B(u(gen), u(gen));
    CHECK(std::abs(inner4(p, p) + 1) < 1e-10 * std::max(1.0, p[2] * p[2]));
    CHECK(p[3] == 0);
  }
  const SurfaceChart b = geodesic_chart();
  for (auto [x, y] : sample(b.bounds, 5)) {
    const auto [px, py] = fd_tangents(b, x, y);
    const double g = b.conformal_factor(x, y);
    CHECK(ambient_inner(Ambient::H31, px, px) == Approx(g).epsilon(1e-8));
    CHECK(ambient_inner(Ambient::H31, py, py) == Approx(g).epsilon(1e-8));
    CHECK(std::abs(ambient_inner(Ambient::H31, px, py)) < 1e-8 * g);
  }
}

TEST_CASE("hyperbolic cylinders") {
  for (double t : {-kPi / 2, 0.0, 0.9, 2.5}) {
    const SurfaceChart c = hyperbolic_cylinder(t);
    for (auto [x, y] : sample({-2, 2, -2, 2}, 6)) {
      const Vec4 p = hyperbolic_cylinder_point(t, x, y);
      CHECK(std::abs(inner4(p, p) + 1) < 1e-10);
      CHECK(p[0] * p[0] - p[2] * p[2] == Approx(-0.5).epsilon(1e-12));
      CHECK(p[1] * p[1] - p[3] * p[3] == Approx(-0.5).epsilon(1e-12));
      const auto [px, py] = fd_tangents(c, x, y);
      CHECK(ambient_inner(Ambient::H31, px, px) == Approx(1.0).epsilon(1e-8));
      CHECK(ambient_inner(Ambient::H31, py, py) == Approx(1.0).epsilon(1e-8));
      CHECK(std::abs(ambient_inner(Ambient::H31, px, py)) < 1e-8);
    }
    const std::complex<double> want = std::complex<double>(0, 0.5) * std::polar(1.0, t);
    CHECK(std::abs(*c.hopf - want) < 1e-15);
  }
}

TEST_CASE("maximal family with E = -1 and v = 0 is a rotated cylinder") {
  const SurfaceChart phi = maximal_phi_E(solve(-1, 0), 0.0);
  for (auto [x, y] : sample({-2, 2, -2, 2}, 7)) {
    const Vec4 p = as_vec4(phi(x, y));
    const Vec4 q = hyperbolic_cylinder_point(-kPi / 2, x, y);
    CHECK(dist(p, Vec4{-q[1], q[0], q[2], q[3]}) < 1e-12);
  }
}

TEST_CASE("maximal family lies on H31 and is conformal") {
  for (double E : kEnergies) {
    CAPTURE(E);
    const SurfaceChart c = maximal_phi_E(solve(E, v0_for(E)));
    const Rect r = c.bounds.inner(0.9);
    for (auto [x, y] : sample(r, 6)) {
      const Coords p = c(x, y);
      CHECK(quadric_residual(Ambient::H31, p) < 1e-10);
      CHECK(std::abs(inner4(as_vec4(p), as_vec4(p)) + 1) < 1e-10);
      const auto [px, py] = fd_tangents(c, x, y, 1e-6);
      const ChartJet j = c.jet(x, y);
      double scale = 0, err = 0;
      for (int i = 0; i < 4; ++i) {
        scale = std::max({scale, std::abs(px[i]), std::abs(py[i])});
        err = std::max({err, std::abs(px[i] - j.px[i]), std::abs(py[i] - j.py[i])});
      }
      CHECK(err < 1e-6 * scale);
      const double g = c.conformal_factor(x, y);
      CHECK(std::exp(2 * eval_v(solve(E, v0_for(E)), x)) == Approx(g).epsilon(1e-14));
      CHECK(ambient_inner(Ambient::H31, j.px, j.px) == Approx(g).epsilon(1e-10));
      CHECK(ambient_inner(Ambient::H31, j.py, j.py) == Approx(g).epsilon(1e-10));
      CHECK(std::abs(ambient_inner(Ambient::H31, j.px, j.py)) < 1e-10 * g);
    }
    CHECK(*c.hopf == std::complex<double>(0.5, 0));
  }
}

TEST_CASE("maximal family domain errors") {
  const SinhGordonSolution s = solve(-6, v0_for(-6));
  const SurfaceChart c = maximal_phi_E(s);
  const Interval adm = admissible_interval(s);
  CHECK(error_kind([&] { c(adm.hi + 0.01, 0); }) == ErrorKind::Domain);
  CHECK(error_kind([&] { c(adm.lo - 0.01, 0); }) == ErrorKind::Domain);
  CHECK(error_kind([&] { c(s.interval.lo + 0.01, 0); }) == ErrorKind::Domain);
  CHECK(error_kind([] { maximal_phi_E(solve(0, 0.2)); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { minimal_Phi_E(solve(0, 0.2)); }) == ErrorKind::Unsupported);
  const SurfaceChart d = maximal_phi_E(solve(4, 0));
  CHECK(error_kind([&] { d(0.7, 0); }) == ErrorKind::Domain);
}

TEST_CASE("minimal family in H2xR") {
  for (double E : kEnergies) {
    CAPTURE(E);
    const SinhGordonSolution s = solve(E, v0_for(E));
    const SurfaceChart c = minimal_Phi_E(s);
    const double k = std::sqrt(2 * std::abs(E));
    for (auto [x, y] : sample(c.bounds.inner(0.9), 6)) {
      const PointH2xR q = as_h2xr(c(x, y));
      CHECK(h2_residual(q.p) < 1e-10 * std::max(1.0, q.p[0] * q.p[0]));
      CHECK(q.p[0] > 0);
      CHECK(q.p[E > 0 ? 0 : 1] == Approx(eval_v_prime(s, x) / k).epsilon(1e-13));
      CHECK(q.t == Approx(std::sqrt(2.0) * (y - x)).epsilon(1e-15));
      const auto [px, py] = fd_tangents(c, x, y, 1e-6);
      const double g = c.conformal_factor(x, y);
      const double ch = std::cosh(eval_v(s, x));
      CHECK(g == Approx(4 * ch * ch).epsilon(1e-14));
      CHECK(ambient_inner(Ambient::H2xR, px, px) == Approx(g).epsilon(1e-6));
      CHECK(ambient_inner(Ambient::H2xR, py, py) == Approx(g).epsilon(1e-6));
    }
    if (c.domain.contains(1, 1)) CHECK(c(1, 1)[3] == 0);
    CHECK(*c.hopf == std::complex<double>(0, -1));
  }
}

TEST_CASE("unit normal") {
  const SurfaceChart cyl = hyperbolic_cylinder(0.4);
  for (auto [x, y] : sample({-1, 1, -1, 1}, 4)) {
    const Vec4 N = unit_normal(cyl, x, y);
    const Vec4 p = as_vec4(cyl(x, y));
    const auto [px, py] = fd_tangents(cyl, x, y);
    CHECK(std::abs(inner4(N, N) + 1) < 1e-8);
    CHECK(std::abs(inner4(N, p)) < 1e-8);
    CHECK(std::abs(inner4(N, as_vec4(px))) < 1e-8);
    CHECK(std::abs(inner4(N, as_vec4(py))) < 1e-8);
    CHECK(det4(as_vec4(px), as_vec4(py), p, N) > 0);
  }
  const SurfaceChart b = geodesic_chart();
  const Vec4 N = unit_normal(b, -0.8, 0.3);
  CHECK(std::abs(N[0]) + std::abs(N[1]) + std::abs(N[2]) < 1e-9);
  CHECK(std::abs(std::abs(N[3]) - 1) < 1e-9);
  CHECK(error_kind([&] { unit_normal(b, -1e-7, 0.0); }) == ErrorKind::StencilOutOfDomain);
  CHECK(error_kind([] { unit_normal(minimal_Phi_E(solve(4, 0)), 0, 0); }) == ErrorKind::NotApplicable);
  SurfaceChart flat = cyl;
  flat.eval = [](double x, double) { return from_vec4(hyperbolic_cylinder_point(0, x, 0)); };
  CHECK(error_kind([&] { unit_normal(flat, 0.1, 0.1); }) == ErrorKind::DegenerateTangent);
}

TEST_CASE("Gauss map ground truths") {
  const SurfaceChart b = geodesic_chart();
  for (auto [x, y] : sample(b.bounds, 5)) {
    const GaussPair g = gauss_map(b, x, y);
    CHECK(dist(reflect_plus_to_minus(g.plus), g.minus) < 1e-10);
    CHECK(h2_residual(g.plus) < 1e-10 * g.plus[0] * g.plus[0]);
    const Coords p = b(x, y);
    CHECK(dist(g.minus, Vec3{p[2], p[1], p[0]}) < 1e-10 * p[2]);
  }
  for (double t : {-kPi / 2, 0.0, 0.7}) {
    const SurfaceChart c = hyperbolic_cylinder(t);
    for (auto [x, y] : sample({-1, 1, -1, 1}, 5)) {
      const double s = 2 * (std::complex<double>(x, y) * std::polar(1.0, t / 2)).imag();
      const GaussPair g = gauss_map(c, x, y);
      CHECK(dist(g.minus, Vec3{std::cosh(s), 0, std::sinh(s)}) < 1e-8);
    }
  }
}

TEST_CASE("Gauss map ignores the choice of oriented tangent basis") {
  const SurfaceChart c = maximal_phi_E(solve(4, 0));
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> ang(-kPi, kPi), scl(0.3, 3);
  for (auto [x, y] : sample(c.bounds.inner(0.8), 4)) {
    const ChartJet j = c.jet(x, y);
    const Vec4 p = as_vec4(j.p), px = as_vec4(j.px), py = as_vec4(j.py);
    const GaussPair g0 = gauss_map_from_jet(p, px, py);
    for (int k = 0; k < 5; ++k) {
      const double a = ang(gen), l = scl(gen);
      Vec4 u, w;
      for (int i = 0; i < 4; ++i) {
        u[i] = l * (std::cos(a) * px[i] + std::sin(a) * py[i]);
        w[i] = l * (-std::sin(a) * px[i] + std::cos(a) * py[i]);
      }
      const GaussPair g = gauss_map_from_jet(p, u, w);
      CHECK(dist(g.plus, g0.plus) < 1e-10 * g0.plus[0]);
      CHECK(dist(g.minus, g0.minus) < 1e-10 * g0.minus[0]);
    }
  }
}

TEST_CASE("pair map") {
  const SurfaceChart cyl = hyperbolic_cylinder(-kPi / 2);
  const GaussPair a = pair_gauss_map(cyl, cyl, 0.2, -0.1), b = gauss_map(cyl, 0.2, -0.1);
  CHECK(dist(a.plus, b.plus) == 0);
  CHECK(dist(a.minus, b.minus) == 0);
  const SurfaceChart pc = pair_chart(cyl, cyl);
  CHECK(pc.conformal_factor(0.3, 0.3) == Approx(4.0));
  const Coords p = pc(0.1, 0.2);
  CHECK(quadric_residual(Ambient::H2xH2, p) < 1e-10);
  CHECK(error_kind([&] { pair_gauss_map(cyl, hyperbolic_cylinder(0.5), 0, 0); }) == ErrorKind::HopfMismatch);
  CHECK(error_kind([&] { pair_chart(cyl, geodesic_chart()); }) == ErrorKind::HopfMismatch);
  const SinhGordonSolution s = solve(-0.5, 0);
  const SurfaceChart mixed = pair_chart(maximal_phi_E(s), cyl);
  for (double x : {-0.9, -0.4}) {
    const double ch = std::cosh(eval_v(s, x));
    CHECK(mixed.conformal_factor(x, 0.2) == Approx(4 * ch * ch).epsilon(1e-12));
  }
}

TEST_CASE("modified Gauss map") {
  const SurfaceChart cyl = hyperbolic_cylinder(-kPi / 2);
  const SurfaceChart m = modified_gauss_map(cyl);
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(m(r, r)[3]) < 1e-15);
  CHECK(m(0.3, 0.5)[3] == Approx(std::sqrt(2.0) * 0.2).epsilon(1e-14));
  const SurfaceChart Phi = minimal_Phi_E(solve(-1, 0));
  for (auto [x, y] : sample({-1, 1, -1, 1}, 5)) {
    const Coords a = m(x, y), b = Phi(x, y);
    CHECK(h2_residual({a[0], a[1], a[2]}) < 1e-10);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
  }
  for (double E : {4.0, -6.0}) {
    const SurfaceChart mg = modified_gauss_map(maximal_phi_E(solve(E, v0_for(E))));
    for (auto [x, y] : sample(mg.bounds.inner(0.9), 4))
      CHECK(h2_residual({mg(x, y)[0], mg(x, y)[1], mg(x, y)[2]}) < 1e-10 * std::max(1.0, mg(x, y)[0] * mg(x, y)[0]));
  }
  CHECK(error_kind([] { modified_gauss_map(geodesic_chart()); }) == ErrorKind::HopfMismatch);
  CHECK(error_kind([] { modified_gauss_map(minimal_Phi_E(solve(4, 0))); }) == ErrorKind::NotApplicable);
}

TEST_CASE("screw actions") {
  const Vec4 p{0.3, -0.2, 1.1, 0.4};
  CHECK(dist(screw_action_h31(4, 0, p), p) == 0);
  CHECK(dist(screw_action_h31(-4, 0, p), p) == 0);
  CHECK(error_kind([&] { screw_action_h31(0, 1, p); }) == ErrorKind::Unsupported);
  const PointH2xR q{{1.2, 0.3, 0.5}, 0.7};
  const PointH2xR q0 = screw_action_h2xr(2, 0, q);
  CHECK(dist(q0.p, q.p) == 0);
  CHECK(q0.t == q.t);
  for (double E : kEnergies) {
    CAPTURE(E);
    const SinhGordonSolution s = solve(E, v0_for(E));
    const SurfaceChart phi = maximal_phi_E(s), Phi = minimal_Phi_E(s);
    const double k = std::sqrt(2 * std::abs(E));
    for (auto [x, y] : sample(phi.bounds.inner(0.9), 4))
      for (double d : {-0.7, 0.25, 1.3}) {
        const Vec4 moved = as_vec4(phi(x, y + d));
        const Vec4 acted = screw_action_h31(E, E > 0 ? -k * d : k * d, as_vec4(phi(x, y)));
        CHECK(dist(moved, acted) < 1e-9 * std::max(1.0, std::abs(moved[2]) + std::abs(moved[3])));
        const PointH2xR a = as_h2xr(Phi(x, y + d));
        const PointH2xR b = screw_action_h2xr(E, E > 0 ? k * d : -k * d, as_h2xr(Phi(x, y)));
        CHECK(dist(a.p, b.p) < 1e-9 * std::max(1.0, a.p[0]));
        CHECK(std::abs(a.t - b.t) < 1e-12);
      }
  }
}
