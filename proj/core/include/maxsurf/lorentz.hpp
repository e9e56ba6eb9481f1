#pragma once

#include <array>

namespace maxsurf {

/// Point or vector of R^4_2 with <u,v> = u1 v1 + u2 v2 - u3 v3 - u4 v4.
/// As a pair of complex numbers: z = x1 + i x2, w = x3 + i x4.
using Vec4 = std::array<double, 4>;

/// Minkowski 3-space with <x,y> = -x1 y1 + x2 y2 + x3 y3 (x1 timelike).
using Vec3 = std::array<double, 3>;

/// Components in the ordered basis e12, e13, e14, e23, e24, e34.
struct Bivector {
  std::array<double, 6> c{};

  Bivector& operator+=(const Bivector& o);
  Bivector& operator-=(const Bivector& o);
  Bivector& operator*=(double s);
};

Bivector operator+(Bivector a, const Bivector& b);
Bivector operator-(Bivector a, const Bivector& b);
Bivector operator*(double s, Bivector a);

struct PointH2xR {
  Vec3 p{1.0, 0.0, 0.0};
  double t = 0.0;
};

double inner4(const Vec4& u, const Vec4& v) noexcept;
double inner3(const Vec3& x, const Vec3& y) noexcept;
double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) noexcept;

Bivector wedge(const Vec4& u, const Vec4& v) noexcept;
double biv_inner(const Bivector& a, const Bivector& b) noexcept;

/// Gram matrix of biv_inner on the basis bivectors.
const std::array<std::array<double, 6>, 6>& bivector_gram();

/// Hodge star defined by a ^ star(b) = g(a, b) e1234, obtained by solving the
/// 6x6 linear system of that relation on basis elements.
Bivector star(const Bivector& a);
const std::array<std::array<double, 6>, 6>& star_matrix();

enum class Side { Plus, Minus };

/// Projection (id +- star) / 2 onto the self-dual / anti-self-dual part.
Bivector project(const Bivector& a, Side side);

struct BivectorFrames {
  std::array<Bivector, 3> plus;
  std::array<Bivector, 3> minus;
};

/// E+-_1 = (e1^e2 +- e4^e3)/sqrt2, E+-_2 = (e1^e3 +- e4^e2)/sqrt2,
/// E+-_3 = (e1^e4 +- e2^e3)/sqrt2 for an oriented orthonormal frame.
/// Throws ErrorKind::FrameValidation for a frame that is not orthonormal or
/// not positively oriented (tolerance 1e-9).
BivectorFrames frames(const std::array<Vec4, 4>& e);
const BivectorFrames& canonical_frames();

/// Signs of g(E_j, E_j).
inline constexpr std::array<double, 3> kFrameSigns{-1.0, 1.0, 1.0};

/// Coordinates of a (anti-)self-dual bivector in the canonical frame.
/// Throws ErrorKind::WrongEigenspace if a is not in the requested eigenspace.
Vec3 lambda_pm_coords(const Bivector& a, Side side);
Bivector from_lambda_pm_coords(const Vec3& q, Side side);

/// (|z|^2 + |w|^2)/2, Re(z conj w), Im(z conj w); lands on -q1^2+q2^2+q3^2 = -1/4.
Vec3 ads_submersion(const Vec4& p);

/// Second factor is (cosh t, 0, sinh t).
std::array<Vec3, 2> h2xr_embed(const PointH2xR& q);

std::array<double, 2> disc_projection(const Vec3& p);
Vec3 disc_inverse(const std::array<double, 2>& d);

/// Timelike unit normal N of an immersion into H^3_1 at p with tangents
/// (px, py) such that (px, py, p, N) is positively oriented.
Vec4 normal_h31(const Vec4& p, const Vec4& px, const Vec4& py);

}  // namespace maxsurf
