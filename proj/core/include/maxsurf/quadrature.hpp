#pragma once

#include <functional>

namespace maxsurf {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]. A subinterval is accepted when
/// its Kronrod/Gauss difference is below max(abs_tol, rel_tol*|estimate|)
/// scaled by its share of the whole interval.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                double rel_tol = 1e-12, double abs_tol = 0.0, int max_depth = 60);

/// Composite 10-point Gauss-Legendre rule over equal panels. Nodes are strictly interior.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels);

}  // namespace maxsurf
