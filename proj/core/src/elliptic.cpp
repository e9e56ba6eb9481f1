#include "maxsurf/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "maxsurf/errors.hpp"

namespace maxsurf {

namespace {

constexpr double kClamp = 1e-14;
constexpr double kPi = std::numbers::pi;

void require_finite_K(const EllipticParameter& m, const char* who) {
  if (m.complement() == 0.0) raise(ErrorKind::Divergence, std::string(who) + ": K(1) diverges");
}

}  // namespace

EllipticParameter::EllipticParameter(double mu) {
  if (!(mu >= -kClamp && mu <= 1.0 + kClamp))
    raise(ErrorKind::Domain, "elliptic parameter outside [0,1]");
  mu_ = std::clamp(mu, 0.0, 1.0);
  mc_ = 1.0 - mu_;
}

EllipticParameter EllipticParameter::from_complement(double mc) {
  if (!(mc >= -kClamp && mc <= 1.0 + kClamp))
    raise(ErrorKind::Domain, "complementary elliptic parameter outside [0,1]");
  mc = std::clamp(mc, 0.0, 1.0);
  return EllipticParameter(1.0 - mc, mc);
}

// Carlson's symmetric integral by the duplication theorem.
double carlson_rf(double x, double y, double z) {
  if (x < 0 || y < 0 || z < 0 || (x == 0) + (y == 0) + (z == 0) > 1)
    raise(ErrorKind::Domain, "carlson_rf: invalid arguments");
  const double a0 = (x + y + z) / 3.0;
  double q = std::pow(3.0 * std::numeric_limits<double>::epsilon(), -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double a = a0, x0 = x, y0 = y, z0 = z, scale = 1.0;
  while (q >= std::abs(a) * scale) {
    const double sx = std::sqrt(x0), sy = std::sqrt(y0), sz = std::sqrt(z0);
    const double lam = sx * sy + sx * sz + sy * sz;
    a = (a + lam) / 4;
    x0 = (x0 + lam) / 4;
    y0 = (y0 + lam) / 4;
    z0 = (z0 + lam) / 4;
    scale *= 4;
  }
  const double X = (a0 - x) / (scale * a);
  const double Y = (a0 - y) / (scale * a);
  const double Z = -(X + Y);
  const double e2 = X * Y - Z * Z;
  const double e3 = X * Y * Z;
  return (1 - e2 / 10 + e3 / 14 + e2 * e2 / 24 - 3 * e2 * e3 / 44) / std::sqrt(a);
}

double ellip_K(const EllipticParameter& m) {
  require_finite_K(m, "ellip_K");
  double a = 1.0, b = std::sqrt(m.complement());
  while (std::abs(a - b) > 4 * std::numeric_limits<double>::epsilon() * a) {
    const double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (a + b);
}

double ellip_F(double phi, const EllipticParameter& m) {
  if (m.complement() == 0.0) {
    if (!(std::abs(phi) < kPi / 2)) raise(ErrorKind::Domain, "ellip_F: |phi| >= pi/2 at mu = 1");
    return std::atanh(std::sin(phi));
  }
  const double n = std::nearbyint(phi / kPi);
  const double r = phi - n * kPi;
  const double s = std::sin(r), c = std::cos(r);
  double f = 0.0;
  if (s != 0.0) f = s * carlson_rf(c * c, c * c + m.complement() * s * s, 1.0);
  if (n != 0.0) f += 2.0 * n * ellip_K(m);
  return f;
}

// Bulirsch's descending Gauss transformation.
SnCnDn jacobi_sncndn(double x, const EllipticParameter& m) {
  if (m.complement() == 0.0) {
    const double sech = 1.0 / std::cosh(x);
    return {std::tanh(x), sech, sech};
  }
  if (m.mu() == 0.0) return {std::sin(x), std::cos(x), 1.0};
  constexpr int kMax = 20;
  const double tol = std::sqrt(std::numeric_limits<double>::epsilon() * 0.01);
  double ms[kMax], ns[kMax];
  double mc = m.complement(), c = 0.0;
  int l = 0;
  for (double a = 1.0; l < kMax; ++l) {
    ms[l] = a;
    ns[l] = mc = std::sqrt(mc);
    c = (a + mc) / 2;
    if (!(std::abs(a - mc) > tol * a)) {
      ++l;
      break;
    }
    mc *= a;
    a = c;
  }
  x *= c;
  double sn = std::sin(x), cn = std::cos(x), dn = 1.0;
  if (sn != 0.0) {
    double a = cn / sn;
    c *= a;
    while (l--) {
      const double b = ms[l];
      a *= c;
      c *= dn;
      dn = (ns[l] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = std::signbit(sn) ? -a : a;
    cn = c * sn;
  }
  return {sn, cn, dn};
}

double jacobi_sn(double x, const EllipticParameter& m) { return jacobi_sncndn(x, m).sn; }
double jacobi_cn(double x, const EllipticParameter& m) { return jacobi_sncndn(x, m).cn; }
double jacobi_dn(double x, const EllipticParameter& m) { return jacobi_sncndn(x, m).dn; }

double jacobi_tn(double x, const EllipticParameter& m) {
  const SnCnDn s = jacobi_sncndn(x, m);
  if (std::abs(s.cn) < 4 * std::numeric_limits<double>::epsilon())
    raise(ErrorKind::Pole, "jacobi_tn: cn vanishes");
  return s.sn / s.cn;
}

double jacobi_am(double x, const EllipticParameter& m) {
  if (m.complement() == 0.0) return std::atan(std::sinh(x));
  if (m.mu() == 0.0) return x;
  const double K = ellip_K(m);
  const double n = std::nearbyint(x / (2 * K));
  const SnCnDn s = jacobi_sncndn(x - 2 * n * K, m);
  return std::atan2(s.sn, s.cn) + n * kPi;
}

namespace {

double unit_argument(double y, const char* who) {
  if (!(y >= -kClamp && y <= 1.0 + kClamp))
    raise(ErrorKind::Range, std::string(who) + ": argument outside [0,1]");
  return std::clamp(y, 0.0, 1.0);
}

}  // namespace

double arcsn(double y, const EllipticParameter& m) {
  y = unit_argument(y, "arcsn");
  if (y == 1.0) {
    require_finite_K(m, "arcsn");
    return ellip_K(m);
  }
  return ellip_F(std::asin(y), m);
}

double arccn(double y, const EllipticParameter& m) {
  y = unit_argument(y, "arccn");
  if (y == 0.0) {
    require_finite_K(m, "arccn");
    return ellip_K(m);
  }
  return ellip_F(std::acos(y), m);
}

double arctn(double y, const EllipticParameter& m) {
  if (!(y >= -kClamp)) raise(ErrorKind::Range, "arctn: negative argument");
  if (std::isinf(y)) {
    require_finite_K(m, "arctn");
    return ellip_K(m);
  }
  return ellip_F(std::atan(std::max(y, 0.0)), m);
}

}  // namespace maxsurf
