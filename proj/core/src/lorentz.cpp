#include "maxsurf/lorentz.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

using Mat6 = std::array<std::array<double, 6>, 6>;

constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
constexpr std::array<double, 4> kEta4{1.0, 1.0, -1.0, -1.0};

int permutation_sign(std::array<int, 4> p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

Mat6 build_gram() {
  Mat6 g{};
  for (int a = 0; a < 6; ++a) {
    const auto [i, j] = kPairs[a];
    for (int b = 0; b < 6; ++b) {
      const auto [k, l] = kPairs[b];
      const double il = i == l ? kEta4[i] : 0.0, jk = j == k ? kEta4[j] : 0.0;
      const double ik = i == k ? kEta4[i] : 0.0, jl = j == l ? kEta4[j] : 0.0;
      g[a][b] = il * jk - ik * jl;
    }
  }
  return g;
}

Mat6 build_star() {
  // W[a][b]: coefficient of e1234 in basis_a ^ basis_b.  Solve W S = G.
  Mat6 w{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto [i, j] = kPairs[a];
      const auto [k, l] = kPairs[b];
      if (i != k && i != l && j != k && j != l) w[a][b] = permutation_sign({i, j, k, l});
    }
  const Mat6& g = bivector_gram();
  // Gauss-Jordan with partial pivoting on [W | G].
  std::array<std::array<double, 12>, 6> aug{};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      aug[r][c] = w[r][c];
      aug[r][c + 6] = g[r][c];
    }
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    std::swap(aug[col], aug[piv]);
    const double d = aug[col][col];
    for (double& v : aug[col]) v /= d;
    for (int r = 0; r < 6; ++r) {
      if (r == col || aug[r][col] == 0.0) continue;
      const double f = aug[r][col];
      for (int c = 0; c < 12; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Mat6 s{};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) s[r][c] = aug[r][c + 6];
  return s;
}

}  // namespace

Bivector& Bivector::operator+=(const Bivector& o) {
  for (int i = 0; i < 6; ++i) c[i] += o.c[i];
  return *this;
}
Bivector& Bivector::operator-=(const Bivector& o) {
  for (int i = 0; i < 6; ++i) c[i] -= o.c[i];
  return *this;
}
Bivector& Bivector::operator*=(double s) {
  for (double& v : c) v *= s;
  return *this;
}
Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
Bivector operator*(double s, Bivector a) { return a *= s; }

double inner4(const Vec4& u, const Vec4& v) noexcept {
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
}

double inner3(const Vec3& x, const Vec3& y) noexcept {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

double det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) noexcept {
  const std::array<Vec4, 4> m{a, b, c, d};
  auto minor3 = [&m](int skip) {
    int cols[3], n = 0;
    for (int k = 0; k < 4; ++k)
      if (k != skip) cols[n++] = k;
    const auto& r1 = m[1];
    const auto& r2 = m[2];
    const auto& r3 = m[3];
    return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
           r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
           r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
  };
  double det = 0.0;
  for (int k = 0; k < 4; ++k) det += (k % 2 == 0 ? 1.0 : -1.0) * m[0][k] * minor3(k);
  return det;
}

Bivector wedge(const Vec4& u, const Vec4& v) noexcept {
  Bivector b;
  for (int a = 0; a < 6; ++a) {
    const auto [i, j] = kPairs[a];
    b.c[a] = u[i] * v[j] - u[j] * v[i];
  }
  return b;
}

const std::array<std::array<double, 6>, 6>& bivector_gram() {
  static const Mat6 g = build_gram();
  return g;
}

double biv_inner(const Bivector& a, const Bivector& b) noexcept {
  const Mat6& g = bivector_gram();
  double s = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) s += a.c[i] * g[i][j] * b.c[j];
  return s;
}

const std::array<std::array<double, 6>, 6>& star_matrix() {
  static const Mat6 s = build_star();
  return s;
}

Bivector star(const Bivector& a) {
  const Mat6& s = star_matrix();
  Bivector out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.c[i] += s[i][j] * a.c[j];
  return out;
}

Bivector project(const Bivector& a, Side side) {
  const Bivector s = star(a);
  return side == Side::Plus ? 0.5 * (a + s) : 0.5 * (a - s);
}

BivectorFrames frames(const std::array<Vec4, 4>& e) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double want = i == j ? kEta4[i] : 0.0;
      if (std::abs(inner4(e[i], e[j]) - want) > 1e-9)
        raise(ErrorKind::FrameValidation, "frame is not orthonormal");
    }
  if (det4(e[0], e[1], e[2], e[3]) <= 0)
    raise(ErrorKind::FrameValidation, "frame is not positively oriented");
  const double r = 1.0 / std::numbers::sqrt2;
  BivectorFrames f;
  const Bivector a1 = wedge(e[0], e[1]), b1 = wedge(e[3], e[2]);
  const Bivector a2 = wedge(e[0], e[2]), b2 = wedge(e[3], e[1]);
  const Bivector a3 = wedge(e[0], e[3]), b3 = wedge(e[1], e[2]);
  f.plus = {r * (a1 + b1), r * (a2 + b2), r * (a3 + b3)};
  f.minus = {r * (a1 - b1), r * (a2 - b2), r * (a3 - b3)};
  return f;
}

const BivectorFrames& canonical_frames() {
  static const BivectorFrames f =
      frames({Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}});
  return f;
}

Vec3 lambda_pm_coords(const Bivector& a, Side side) {
  const Bivector other = project(a, side == Side::Plus ? Side::Minus : Side::Plus);
  double off = 0.0, size = 0.0;
  for (int i = 0; i < 6; ++i) {
    off = std::max(off, std::abs(other.c[i]));
    size = std::max(size, std::abs(a.c[i]));
  }
  if (off > 1e-9 * std::max(1.0, size))
    raise(ErrorKind::WrongEigenspace, "bivector not in the requested eigenspace");
  const auto& basis = side == Side::Plus ? canonical_frames().plus : canonical_frames().minus;
  Vec3 q;
  for (int j = 0; j < 3; ++j) q[j] = kFrameSigns[j] * biv_inner(a, basis[j]);
  return q;
}

Bivector from_lambda_pm_coords(const Vec3& q, Side side) {
  const auto& basis = side == Side::Plus ? canonical_frames().plus : canonical_frames().minus;
  return q[0] * basis[0] + q[1] * basis[1] + q[2] * basis[2];
}

Vec3 ads_submersion(const Vec4& p) {
  if (std::abs(inner4(p, p) + 1.0) > 1e-9 * std::max(1.0, std::abs(p[2]) + std::abs(p[3])))
    raise(ErrorKind::OffManifold, "ads_submersion: point not on H^3_1");
  const double zr = p[0], zi = p[1], wr = p[2], wi = p[3];
  return {0.5 * (zr * zr + zi * zi + wr * wr + wi * wi), zr * wr + zi * wi, zi * wr - zr * wi};
}

std::array<Vec3, 2> h2xr_embed(const PointH2xR& q) {
  return {q.p, Vec3{std::cosh(q.t), 0.0, std::sinh(q.t)}};
}

std::array<double, 2> disc_projection(const Vec3& p) {
  const double scale = std::max(1.0, std::abs(p[0]));
  if (!(p[0] > 0) || std::abs(inner3(p, p) + 1.0) > 1e-8 * scale * scale)
    raise(ErrorKind::OffManifold, "disc_projection: point not on the upper hyperboloid");
  return {p[1] / (1 + p[0]), p[2] / (1 + p[0])};
}

Vec3 disc_inverse(const std::array<double, 2>& d) {
  const double r2 = d[0] * d[0] + d[1] * d[1];
  if (!(r2 < 1.0)) raise(ErrorKind::Domain, "disc_inverse: point outside the unit disc");
  const double s = 1.0 / (1.0 - r2);
  return {(1 + r2) * s, 2 * d[0] * s, 2 * d[1] * s};
}

Vec4 normal_h31(const Vec4& p, const Vec4& px, const Vec4& py) {
  // Generalized cross product: w_i = det(e_i, px, py, p), then raise the index.
  Vec4 n;
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1.0;
    n[i] = kEta4[i] * det4(e, px, py, p);
  }
  const double nn = inner4(n, n);
  if (!(nn < 0)) raise(ErrorKind::DegenerateTangent, "tangent plane is not spacelike");
  const double s = 1.0 / std::sqrt(-nn);
  for (double& v : n) v *= s;
  return n;
}

}  // namespace maxsurf
