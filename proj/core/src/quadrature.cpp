#include "maxsurf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace maxsurf {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double kronrod;
  double error;
  double roundoff;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double rk = fc * kWgk[7], rg = fc * kWg[3], rabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx), f2 = f(c + dx);
    rk += kWgk[j] * (f1 + f2);
    rabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) rg += kWg[j / 2] * (f1 + f2);
  }
  const double roundoff = 50 * std::numeric_limits<double>::epsilon() * rabs * std::abs(h);
  return {a, b, rk * h, std::max(std::abs((rk - rg) * h), roundoff), roundoff};
}

}  // namespace

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, double abs_tol, int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  // Global bisection of the panel with the largest error estimate.
  const std::size_t limit = std::size_t{1} << std::min(max_depth, 12);
  std::vector<Panel> panels{gk15(f, a, b)};
  out.evaluations = 15;
  auto totals = [&panels](double& value, double& error) {
    value = 0.0;
    error = 0.0;
    for (const Panel& p : panels) {
      value += p.kronrod;
      error += p.error;
    }
  };
  double value = 0.0, error = 0.0;
  totals(value, error);
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (panels.size() >= limit) {
      out.converged = false;
      break;
    }
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& x, const Panel& y) { return x.error < y.error; });
    if (worst->error <= worst->roundoff) break;
    const double lo = worst->a, hi = worst->b, mid = 0.5 * (lo + hi);
    if (!(mid > std::min(lo, hi) && mid < std::max(lo, hi))) {
      out.converged = false;
      break;
    }
    *worst = gk15(f, lo, mid);
    panels.push_back(gk15(f, mid, hi));
    out.evaluations += 30;
    totals(value, error);
  }
  out.value = value;
  out.error = error;
  return out;
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels) {
  static constexpr std::array<double, 5> x = {
      0.148874338981631210884826001129720, 0.433395394129247190799265943165784,
      0.679409568299024406234327365114874, 0.865063366688984510732096688423493,
      0.973906528517171720077964012084452};
  static constexpr std::array<double, 5> w = {
      0.295524224714752870173892994651338, 0.269266719309996355091226921569469,
      0.219086362515982043995534934228163, 0.149451349150580593145776339657697,
      0.066671344308688137593568809893332};
  if (panels < 1) panels = 1;
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * width, h = 0.5 * width;
    double s = 0.0;
    for (int j = 0; j < 5; ++j) s += w[j] * (f(c - h * x[j]) + f(c + h * x[j]));
    total += s * h;
  }
  return total;
}

}  // namespace maxsurf
