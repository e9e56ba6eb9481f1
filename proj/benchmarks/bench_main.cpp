#include <benchmark/benchmark.h>

#include <cmath>

#include "maxsurf/diffgeo.hpp"
#include "maxsurf/elliptic.hpp"
#include "maxsurf/sinh_gordon.hpp"

using namespace maxsurf;

static void BM_JacobiSnCnDn(benchmark::State& state) {
  const EllipticParameter m(0.7);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_sncndn(x, m));
    x += 1e-3;
  }
}
BENCHMARK(BM_JacobiSnCnDn);

static void BM_EllipticF(benchmark::State& state) {
  const EllipticParameter m(0.9);
  for (auto _ : state) benchmark::DoNotOptimize(ellip_F(1.3, m));
}
BENCHMARK(BM_EllipticF);

static void BM_SolveAndEvaluate(benchmark::State& state) {
  for (auto _ : state) {
    const SinhGordonSolution s = solve(-4.0, 1.2);
    benchmark::DoNotOptimize(eval_v(s, 0.05));
  }
}
BENCHMARK(BM_SolveAndEvaluate);

static void BM_GIntegral(benchmark::State& state) {
  const SinhGordonSolution s = solve(4.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(G_integral(s, 0.5, 0.0));
}
BENCHMARK(BM_GIntegral);

static void BM_MaximalChartJet(benchmark::State& state) {
  const SurfaceChart c = maximal_phi_E(solve(-6.0, 0.5 * std::acosh(6.0)));
  const double x = 0.5 * (c.bounds.x0 + c.bounds.x1);
  for (auto _ : state) benchmark::DoNotOptimize(fd_jet(c, x, 0.3));
}
BENCHMARK(BM_MaximalChartJet);

static void BM_SuiteCylinder(benchmark::State& state) {
  const SurfaceChart c = hyperbolic_cylinder(0.3);
  const GridSpec g{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), {-0.9, 0.9, -0.9, 0.9}};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(c, g));
}
BENCHMARK(BM_SuiteCylinder)->Arg(21)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
