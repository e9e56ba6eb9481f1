#pragma once

#include <limits>
#include <vector>

#include "maxsurf/elliptic.hpp"

namespace maxsurf {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return x > lo && x < hi; }
  bool bounded() const noexcept;
  double length() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  /// Interval shrunk symmetrically to the given fraction of its length (bounded only).
  Interval inner(double fraction) const noexcept;
};

enum class Branch { Tn, TnDn, Sn, ConstantZero };

const char* to_string(Branch b) noexcept;

/// Closed-form solution of v'' = 2 sinh(2v) with energy E = v'^2/2 - cosh(2v),
/// v(0) = v0 >= 0 and v'(0) >= 0 (or the mirror -v when negated).
///
/// Internally v(x) = sign * f(scale * x + a0) where f is the branch function
/// of the elliptic argument u.
struct SinhGordonSolution {
  double energy = -1.0;
  double v0 = 0.0;
  Branch branch = Branch::ConstantZero;
  double lambda = 1.0;
  EllipticParameter mu;
  double a0 = 0.0;
  Interval interval;
  bool negated = false;

  double scale = 1.0;
  double sign = 1.0;
};

/// Throws ErrorKind::Domain when v0 < 0 or E < -cosh(2 v0).
SinhGordonSolution solve(double E, double v0, bool negated = false);

double eval_v(const SinhGordonSolution& s, double x);
double eval_v_prime(const SinhGordonSolution& s, double x);

struct RkSample {
  double x;
  double v;
  double v_prime;
  double energy;
};

struct RkPath {
  std::vector<RkSample> samples;
  bool blew_up = false;
  double max_energy_drift = 0.0;
};

/// Classical RK4 for v'' = 2 sinh(2v) from x = 0 towards x_max (either sign).
/// Stops early once |v| exceeds 50.
RkPath rk_oracle(double E, double v0, double v0prime, double x_max, double h);

/// Maximal subinterval of I where 2E + e^{2v} < 0. Requires E < 0.
Interval admissible_interval(const SinhGordonSolution& s);

/// Base point used when none is supplied: 0 when the integrand is regular
/// there, otherwise a point inside the admissible interval.
double default_G_base(const SinhGordonSolution& s);

/// Integral of dt / (2E + e^{2v(t)}) from x_base to x.
double G_integral(const SinhGordonSolution& s, double x, double x_base);
double G_integral(const SinhGordonSolution& s, double x);

}  // namespace maxsurf
