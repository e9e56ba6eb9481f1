#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../support/expect.hpp"
#include "../support/oracles.hpp"
#include "maxsurf/elliptic.hpp"

using namespace maxsurf;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
// mpmath, 30 digits
constexpr double kK05 = 1.8540746773013719;
}  // namespace

TEST_CASE("parameter validation and clamping") {
  CHECK(EllipticParameter(1.0 + 5e-15).mu() == 1.0);
  CHECK(EllipticParameter(-5e-15).mu() == 0.0);
  CHECK(EllipticParameter(0.25).complement() == 0.75);
  CHECK(EllipticParameter::from_complement(1e-20).complement() == 1e-20);
  CHECK(error_kind([] { EllipticParameter(1.1); }) == ErrorKind::Domain);
  CHECK(error_kind([] { EllipticParameter(-0.01); }) == ErrorKind::Domain);
}

TEST_CASE("first-kind integral") {
  CHECK(ellip_F(kPi / 2, 0.0) == Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_F(0.0, 1.0) == 0.0);
  CHECK(ellip_F(0.7, 1.0) == Approx(std::atanh(std::sin(0.7))).epsilon(1e-14));
  CHECK(ellip_F(kPi / 2, 0.5) == Approx(kK05).epsilon(1e-14));
  CHECK(ellip_F(kPi / 2, 0.5) == Approx(oracle::elliptic_K(0.5)).epsilon(1e-12));
  CHECK(ellip_F(0.7, 0.3) == Approx(0.71651771598539313).epsilon(1e-14));
  CHECK(ellip_F(2.5, 0.9) == Approx(4.4713196669962518).epsilon(1e-14));
  CHECK(ellip_F(-1.2, 0.999) == Approx(-1.6723467066503429).epsilon(1e-14));
  for (double phi : {0.1, 0.9, 1.4, 2.2, 4.0, 7.5})
    for (double m : {0.0, 0.2, 0.6, 0.95}) {
      CHECK(ellip_F(phi, m) == Approx(oracle::elliptic_F(phi, m)).epsilon(1e-11));
      CHECK(ellip_F(-phi, m) == -ellip_F(phi, m));
    }
  CHECK(error_kind([] { ellip_F(kPi / 2, 1.0); }) == ErrorKind::Domain);
}

TEST_CASE("complete integral") {
  CHECK(ellip_K(0.0) == Approx(kPi / 2).epsilon(1e-15));
  CHECK(ellip_K(0.5) == Approx(kK05).epsilon(1e-14));
  CHECK(error_kind([] { ellip_K(1.0); }) == ErrorKind::Divergence);
  double prev = ellip_K(0.0);
  for (int i = 1; i < 100; ++i) {
    const double k = ellip_K(i / 100.0);
    CHECK(k > prev);
    prev = k;
  }
  CHECK(ellip_K(EllipticParameter::from_complement(1e-12)) == Approx(0.5 * std::log(16e12)).epsilon(1e-10));
}

TEST_CASE("amplitude") {
  for (double x : {-2.0, 0.3, 1.7}) CHECK(jacobi_am(x, 0.0) == Approx(x).epsilon(1e-15));
  for (double m : {0.1, 0.5, 0.9}) CHECK(jacobi_am(ellip_K(m), m) == Approx(kPi / 2).epsilon(1e-13));
  CHECK(jacobi_am(0.0, 0.4) == 0.0);
  CHECK(jacobi_am(1.0, 0.7) == Approx(oracle::amplitude(1.0, 0.7)).epsilon(1e-11));
  CHECK(jacobi_am(1.0, 0.7) == Approx(0.90554608446341889).epsilon(1e-14));
  for (double m : {0.0, 0.3, 0.8, 0.99}) {
    const double K = ellip_K(m);
    for (double x : {-3.1, -0.4, 0.2, 1.1, 2.5}) {
      CHECK(ellip_F(jacobi_am(x, m), m) == Approx(x).epsilon(1e-10));
      CHECK(jacobi_am(x + 2 * K, m) == Approx(jacobi_am(x, m) + kPi).epsilon(1e-12));
      const double h = 1e-5;
      const double fd = (jacobi_am(x + h, m) - jacobi_am(x - h, m)) / (2 * h);
      CHECK(std::abs(fd - jacobi_dn(x, m)) < 1e-7);
    }
  }
}

TEST_CASE("Jacobi functions at the degenerate parameters") {
  for (double x : {-1.3, 0.0, 0.4, 2.9}) {
    CHECK(jacobi_sn(x, 0.0) == Approx(std::sin(x)).epsilon(1e-15));
    CHECK(jacobi_cn(x, 0.0) == Approx(std::cos(x)).epsilon(1e-15));
    CHECK(jacobi_dn(x, 0.0) == 1.0);
    if (std::abs(std::cos(x)) > 1e-3) CHECK(jacobi_tn(x, 0.0) == Approx(std::tan(x)).epsilon(1e-14));
    CHECK(jacobi_sn(x, 1.0) == Approx(std::tanh(x)).epsilon(1e-15));
    CHECK(jacobi_cn(x, 1.0) == Approx(1 / std::cosh(x)).epsilon(1e-15));
    CHECK(jacobi_dn(x, 1.0) == Approx(1 / std::cosh(x)).epsilon(1e-15));
  }
}

TEST_CASE("quasi-periodicity, poles and identities") {
  for (double m : {0.05, 0.5, 0.93}) {
    const double K = ellip_K(m);
    for (int i = 0; i < 25; ++i) {
      const double x = -3 + 0.27 * i;
      const SnCnDn a = jacobi_sncndn(x, EllipticParameter(m));
      const SnCnDn b = jacobi_sncndn(x + 2 * K, EllipticParameter(m));
      CHECK(std::abs(b.sn + a.sn) < 1e-12);
      CHECK(std::abs(b.dn - a.dn) < 1e-11);
      if (std::abs(a.cn) > 1e-3) CHECK(std::abs(jacobi_tn(x + 2 * K, m) - jacobi_tn(x, m)) < 1e-11 * (1 + std::abs(jacobi_tn(x, m))));
      CHECK(std::abs(a.sn * a.sn + a.cn * a.cn - 1) < 1e-12);
      CHECK(std::abs(m * a.sn * a.sn + a.dn * a.dn - 1) < 1e-12);
    }
    CHECK(error_kind([K, m] { jacobi_tn(K, m); }) == ErrorKind::Pole);
    CHECK(error_kind([K, m] { jacobi_tn(3 * K, m); }) == ErrorKind::Pole);
  }
}

TEST_CASE("derivative identities against central differences") {
  const double h = 1e-5;
  for (double m : {0.2, 0.7}) {
    for (double x : {-1.0, 0.3, 2.2}) {
      auto d = [&](double (*f)(double, double)) { return (f(x + h, m) - f(x - h, m)) / (2 * h); };
      const SnCnDn s = jacobi_sncndn(x, EllipticParameter(m));
      CHECK(std::abs(d(jacobi_sn) - s.cn * s.dn) < 1e-7);
      CHECK(std::abs(d(jacobi_cn) + s.sn * s.dn) < 1e-7);
      CHECK(std::abs(d(jacobi_dn) + m * s.sn * s.cn) < 1e-7);
    }
  }
}

TEST_CASE("principal inverses") {
  CHECK(arcsn(0.0, 0.4) == 0.0);
  CHECK(arcsn(1.0, 0.4) == Approx(ellip_K(0.4)).epsilon(1e-14));
  CHECK(arctn(1.0, 0.0) == Approx(kPi / 4).epsilon(1e-15));
  CHECK(arccn(1.0, 0.6) == 0.0);
  CHECK(arccn(0.0, 0.6) == Approx(ellip_K(0.6)).epsilon(1e-14));
  CHECK(error_kind([] { arcsn(1.2, 0.5); }) == ErrorKind::Range);
  CHECK(error_kind([] { arcsn(-0.1, 0.5); }) == ErrorKind::Range);
  CHECK(error_kind([] { arccn(1.5, 0.5); }) == ErrorKind::Range);
  CHECK(error_kind([] { arctn(-1.0, 0.5); }) == ErrorKind::Range);

  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double m = unit(gen) * 0.999, y = unit(gen), t = 10 * unit(gen);
    const double K = ellip_K(m);
    const double a = arcsn(y, m), b = arccn(y, m), c = arctn(t, m);
    CHECK((a >= 0 && a <= K * (1 + 1e-15)));
    worst = std::max({worst, std::abs(jacobi_sn(a, m) - y), std::abs(jacobi_cn(b, m) - y),
                      std::abs(jacobi_tn(c, m) - t) / (1 + t)});
  }
  CHECK(worst < 1e-9);
}
