#pragma once

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "maxsurf/lorentz.hpp"
#include "maxsurf/sinh_gordon.hpp"

namespace maxsurf {

enum class Ambient { H31, H2xH2, H2xR };

const char* to_string(Ambient a) noexcept;
int ambient_dimension(Ambient a) noexcept;
/// Diagonal of the ambient (flat) metric used for tangent vectors.
std::array<double, 6> ambient_metric(Ambient a) noexcept;
double ambient_inner(Ambient a, const std::array<double, 6>& u, const std::array<double, 6>& v) noexcept;

struct Rect {
  double x0 = -std::numeric_limits<double>::infinity();
  double x1 = std::numeric_limits<double>::infinity();
  double y0 = -std::numeric_limits<double>::infinity();
  double y1 = std::numeric_limits<double>::infinity();

  bool contains(double x, double y) const noexcept { return x > x0 && x < x1 && y > y0 && y < y1; }
  bool bounded() const noexcept;
  Rect inner(double fraction) const noexcept;
};

/// Ambient coordinates; only the first ambient_dimension() entries are used.
using Coords = std::array<double, 6>;

struct ChartJet {
  Coords p{};
  Coords px{};
  Coords py{};
};

struct SurfaceChart {
  std::string label;
  Ambient ambient = Ambient::H31;
  /// Open parameter domain (may be unbounded).
  Rect domain;
  /// Finite rectangle used for default sampling.
  Rect bounds;
  std::function<Coords(double, double)> eval;
  /// Optional exact first derivatives.
  std::function<ChartJet(double, double)> jet;
  std::function<double(double, double)> conformal_factor;
  std::optional<std::complex<double>> hopf;

  Coords operator()(double x, double y) const { return eval(x, y); }
};

/// Residual of the ambient quadric(s); max over factors.
double quadric_residual(Ambient a, const Coords& p) noexcept;

Vec4 as_vec4(const Coords& c) noexcept;
Coords from_vec4(const Vec4& v) noexcept;

/// Point of the totally geodesic plane x4 = 0 in geodesic polar coordinates.
Vec4 totally_geodesic_B(double u, double phi);
/// Conformal chart of B: u = 2 artanh(e^x) for x < 0, factor sinh(u)^2.
SurfaceChart geodesic_chart();

Vec4 hyperbolic_cylinder_point(double t, double x, double y);
SurfaceChart hyperbolic_cylinder(double t);

/// Maximal immersion built from a sinh-Gordon solution; x ranges over I for
/// E > 0 and over the admissible interval for E < 0.
SurfaceChart maximal_phi_E(const SinhGordonSolution& s);
SurfaceChart maximal_phi_E(const SinhGordonSolution& s, double g_base);

/// Minimal immersion into H^2 x R; coordinates (q1, q2, q3, t).
SurfaceChart minimal_Phi_E(const SinhGordonSolution& s);
SurfaceChart minimal_Phi_E(const SinhGordonSolution& s, double g_base);

/// Exact jet if the chart provides one, central differences otherwise.
ChartJet tangent_jet(const SurfaceChart& c, double x, double y, double h = 1e-5);

/// Timelike unit normal from central-difference tangents.
Vec4 unit_normal(const SurfaceChart& c, double x, double y, double h = 1e-5);

struct GaussPair {
  Vec3 plus;
  Vec3 minus;
};

/// Gauss map from a point and its tangents; each factor on the upper sheet.
GaussPair gauss_map_from_jet(const Vec4& p, const Vec4& px, const Vec4& py);
GaussPair gauss_map(const SurfaceChart& c, double x, double y);

/// Identification of Lambda^2_+ with Lambda^2_- induced by the reflection
/// x4 -> -x4 (the isometry fixing B), in frame coordinates.
Vec3 reflect_plus_to_minus(const Vec3& q);

GaussPair pair_gauss_map(const SurfaceChart& a, const SurfaceChart& b, double x, double y);
/// The pair map as a chart into H^2 x H^2; its declared factor is
/// ((2 + |sigma_a|^2) g_a + (2 + |sigma_b|^2) g_b) / 2 from the declared data.
SurfaceChart pair_chart(const SurfaceChart& a, const SurfaceChart& b);

/// Pair (nu+ of c, nu- of the cylinder with the same Hopf constant), the
/// second factor written as its arclength coordinate on the geodesic.
SurfaceChart modified_gauss_map(const SurfaceChart& c);

Vec4 screw_action_h31(double E, double theta, const Vec4& p);
PointH2xR screw_action_h2xr(double E, double theta, const PointH2xR& q);

PointH2xR as_h2xr(const Coords& c) noexcept;

}  // namespace maxsurf
