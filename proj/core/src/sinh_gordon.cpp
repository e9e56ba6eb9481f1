#include "maxsurf/sinh_gordon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "maxsurf/errors.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEnergySnap = 1e-13;

double elliptic_u(const SinhGordonSolution& s, double x) {
  if (!s.interval.contains(x)) raise(ErrorKind::OutOfInterval, "x outside the maximal interval");
  return s.scale * x + s.a0;
}

// Branch function f(u) and its derivative.
struct BranchValue {
  double f;
  double df;
};

BranchValue branch_value(const SinhGordonSolution& s, double u) {
  switch (s.branch) {
    case Branch::ConstantZero:
      return {0.0, 0.0};
    case Branch::Tn: {
      const SnCnDn j = jacobi_sncndn(u, s.mu);
      return {std::log(s.lambda * j.sn / j.cn), j.dn / (j.sn * j.cn)};
    }
    case Branch::TnDn: {
      const SnCnDn j = jacobi_sncndn(u, s.mu);
      const double num = j.cn * j.cn * j.dn * j.dn + s.mu.complement() * j.sn * j.sn;
      return {std::log(j.sn * j.dn / j.cn), num / (j.sn * j.cn * j.dn)};
    }
    case Branch::Sn: {
      const SnCnDn j = jacobi_sncndn(u, s.mu);
      return {std::log(s.lambda) - std::log(j.sn), -j.cn * j.dn / j.sn};
    }
  }
  return {0.0, 0.0};
}

}  // namespace

bool Interval::bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

Interval Interval::inner(double fraction) const noexcept {
  const double half = 0.5 * fraction * (hi - lo), mid = midpoint();
  return {mid - half, mid + half};
}

const char* to_string(Branch b) noexcept {
  switch (b) {
    case Branch::Tn: return "tn";
    case Branch::TnDn: return "tndn";
    case Branch::Sn: return "sn";
    case Branch::ConstantZero: return "zero";
  }
  return "unknown";
}

SinhGordonSolution solve(double E, double v0, bool negated) {
  if (!std::isfinite(E) || !std::isfinite(v0)) raise(ErrorKind::Domain, "non-finite input");
  if (v0 < 0) raise(ErrorKind::Domain, "v0 must be non-negative");
  const double floor_e = -std::cosh(2 * v0);
  if (E < floor_e - 1e-12 * std::abs(floor_e))
    raise(ErrorKind::Domain, "energy below -cosh(2 v0)");
  if (std::abs(E + 1.0) < kEnergySnap) E = -1.0;

  SinhGordonSolution s;
  s.energy = E;
  s.v0 = v0;
  s.negated = negated;
  s.sign = negated ? -1.0 : 1.0;

  if (E > 1.0) {
    const double root = std::sqrt((E - 1) * (E + 1));
    const double lam2 = 1.0 / (E + root);
    s.branch = Branch::Tn;
    s.lambda = std::sqrt(lam2);
    s.mu = EllipticParameter::from_complement(lam2 * lam2);
    s.scale = 1.0 / s.lambda;
    const double K = ellip_K(s.mu);
    s.a0 = arctn(std::exp(v0) / s.lambda, s.mu);
    s.interval = {-s.lambda * s.a0, s.lambda * (K - s.a0)};
  } else if (E > -1.0) {
    s.branch = Branch::TnDn;
    s.mu = EllipticParameter::from_complement((1 + E) / 2);
    s.scale = 1.0;
    const double K = ellip_K(s.mu);
    // cn(2u) = -tanh v along this branch; acos(tanh v0) = atan2(1, sinh v0).
    s.a0 = K - 0.5 * ellip_F(std::atan2(1.0, std::sinh(v0)), s.mu);
    s.interval = {-s.a0, K - s.a0};
  } else if (E == -1.0) {
    if (v0 == 0.0) {
      s.branch = Branch::ConstantZero;
      s.mu = EllipticParameter(1.0);
      s.interval = {-kInf, kInf};
    } else {
      // v = log coth(a0 - x): the mu = 1 form of the tndn branch, reflected.
      s.branch = Branch::TnDn;
      s.mu = EllipticParameter(1.0);
      s.scale = -1.0;
      s.sign = -s.sign;
      s.a0 = std::atanh(std::exp(-v0));
      s.interval = {-kInf, s.a0};
    }
  } else {
    const double root = std::sqrt((-E - 1) * (1 - E));
    const double lam2 = -E + root;
    s.branch = Branch::Sn;
    s.lambda = std::sqrt(lam2);
    s.mu = EllipticParameter::from_complement((-E - 1 + root) * (lam2 + 1) / (lam2 * lam2));
    s.scale = s.lambda;
    const double K = ellip_K(s.mu);
    s.a0 = 2 * K - arcsn(std::min(1.0, s.lambda * std::exp(-v0)), s.mu);
    s.interval = {-s.a0 / s.lambda, (2 * K - s.a0) / s.lambda};
  }
  return s;
}

double eval_v(const SinhGordonSolution& s, double x) {
  if (s.branch == Branch::ConstantZero) return 0.0;
  return s.sign * branch_value(s, elliptic_u(s, x)).f;
}

double eval_v_prime(const SinhGordonSolution& s, double x) {
  if (s.branch == Branch::ConstantZero) return 0.0;
  return s.sign * s.scale * branch_value(s, elliptic_u(s, x)).df;
}

RkPath rk_oracle(double E, double v0, double v0prime, double x_max, double h) {
  if (!(h > 0)) raise(ErrorKind::Domain, "rk_oracle: step must be positive");
  const double e0 = 0.5 * v0prime * v0prime - std::cosh(2 * v0);
  if (std::abs(e0 - E) > 1e-12 * std::max(1.0, std::abs(E)))
    raise(ErrorKind::Domain, "rk_oracle: initial data inconsistent with the energy");
  const long n = std::max(1L, static_cast<long>(std::ceil(std::abs(x_max) / h)));
  const double step = x_max / static_cast<double>(n);
  auto accel = [](double v) { return 2 * std::sinh(2 * v); };

  RkPath path;
  path.samples.reserve(static_cast<std::size_t>(n) + 1);
  double v = v0, p = v0prime;
  path.samples.push_back({0.0, v, p, e0});
  for (long i = 1; i <= n; ++i) {
    const double k1v = p, k1p = accel(v);
    const double k2v = p + 0.5 * step * k1p, k2p = accel(v + 0.5 * step * k1v);
    const double k3v = p + 0.5 * step * k2p, k3p = accel(v + 0.5 * step * k2v);
    const double k4v = p + step * k3p, k4p = accel(v + step * k3v);
    v += step / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    p += step / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    if (!std::isfinite(v) || std::abs(v) > 50) {
      path.blew_up = true;
      break;
    }
    const double e = 0.5 * p * p - std::cosh(2 * v);
    path.max_energy_drift = std::max(path.max_energy_drift, std::abs(e - E));
    path.samples.push_back({static_cast<double>(i) * step, v, p, e});
  }
  return path;
}

Interval admissible_interval(const SinhGordonSolution& s) {
  const double E = s.energy;
  if (!(E < 0)) raise(ErrorKind::NotApplicable, "admissible interval needs E < 0");
  Interval out = s.interval;
  switch (s.branch) {
    case Branch::ConstantZero:
    case Branch::Tn:
      break;
    case Branch::TnDn: {
      const bool rising = s.sign * s.scale > 0;
      if (s.mu.complement() == 0.0) {
        // v = +-log coth(a0 - x)
        if (rising) out.hi = s.a0 - std::atanh(1.0 / std::numbers::sqrt2);
      } else {
        const double tv = (-2 * E - 1) / (-2 * E + 1);
        if (rising)
          out.hi = 0.5 * ellip_F(std::acos(-tv), s.mu) - s.a0;
        else
          out.lo = 0.5 * ellip_F(std::acos(tv), s.mu) - s.a0;
      }
      break;
    }
    case Branch::Sn:
      if (!s.negated) {
        const double K = ellip_K(s.mu);
        const double c = arcsn(s.lambda / std::sqrt(-2 * E), s.mu);
        out.lo = (c - s.a0) / s.lambda;
        out.hi = (2 * K - c - s.a0) / s.lambda;
      }
      break;
  }
  out.lo = std::max(out.lo, s.interval.lo);
  out.hi = std::min(out.hi, s.interval.hi);
  return out;
}

double default_G_base(const SinhGordonSolution& s) {
  if (s.energy >= 0) return 0.0;
  const Interval adm = admissible_interval(s);
  if (adm.contains(0.0)) return 0.0;
  if (adm.bounded()) return adm.midpoint();
  return std::isfinite(adm.hi) ? adm.hi - 1.0 : adm.lo + 1.0;
}

double G_integral(const SinhGordonSolution& s, double x, double x_base) {
  if (!s.interval.contains(x) || !s.interval.contains(x_base))
    raise(ErrorKind::OutOfInterval, "G_integral: range leaves the maximal interval");
  const double E = s.energy;
  if (E < 0) {
    const Interval adm = admissible_interval(s);
    const double a = std::min(x, x_base), b = std::max(x, x_base);
    for (double z : {adm.lo, adm.hi}) {
      if (s.interval.contains(z) && z >= a && z <= b)
        raise(ErrorKind::SingularInterval, "G_integral: 2E + exp(2v) vanishes in the range");
    }
  }
  if (x == x_base) return 0.0;
  if (s.branch == Branch::ConstantZero) return (x - x_base) / (2 * E + 1);
  auto integrand = [&s, E](double t) { return 1.0 / (2 * E + std::exp(2 * eval_v(s, t))); };
  return integrate_gk15(integrand, x_base, x, 1e-14, 1e-16).value;
}

double G_integral(const SinhGordonSolution& s, double x) {
  return G_integral(s, x, default_G_base(s));
}

}  // namespace maxsurf
