#include <benchmark/benchmark.h>

#include "linespace/congruence.hpp"
#include "linespace/geodesic.hpp"
#include "linespace/kahler.hpp"
#include "linespace/minimal.hpp"
#include "linespace/rng.hpp"

using namespace linespace;

static void BM_metric_value(benchmark::State& state) {
  Rng rng(1);
  const LinePoint p{rng.disc(0.7), rng.disc(1.0)};
  const TangentVector v{rng.disc(1.0), rng.disc(1.0)};
  const TangentVector w{rng.disc(1.0), rng.disc(1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_value(kLorentzian, p, v, w));
  }
}
BENCHMARK(BM_metric_value);

static void BM_wirtinger_residual(benchmark::State& state) {
  Rng rng(2);
  const LinePoint p{rng.disc(0.7), rng.disc(1.0)};
  const TangentVector v{rng.disc(1.0), rng.disc(1.0)};
  const TangentVector w{rng.disc(1.0), rng.disc(1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wirtinger_residual(kLorentzian, p, v, w));
  }
}
BENCHMARK(BM_wirtinger_residual);

static void BM_rk4_geodesic(benchmark::State& state) {
  const GeodesicParams gp{0.8, 0.9, 0.2, 0.3};
  const GeodesicState st0 = closed_form_th2_state(gp, 0.0);
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_geodesic(kLorentzian, st0, 1.0, step));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_rk4_geodesic)->Arg(100)->Arg(1000);

static void BM_scalar_curvature(benchmark::State& state) {
  BiPoly p(3, 3);
  Rng rng(3);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) p.at(m, n) = rng.disc(0.3);
  p.at(1, 0) += 1.0;
  const SectionJet sec(p);
  const complex xi{0.3, 0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_curvature_graph(kEuclidean, sec, xi));
  }
}
BENCHMARK(BM_scalar_curvature);

static void BM_fd_jet(benchmark::State& state) {
  BiPoly p(3, 3);
  Rng rng(4);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) p.at(m, n) = rng.disc(0.3);
  const SectionJet sec([p](complex z) { return p.eval(z); });
  const complex xi{0.25, -0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sec.jet(xi));
  }
}
BENCHMARK(BM_fd_jet);

static void BM_weierstrass_mesh(benchmark::State& state) {
  const HoloPoly w({0.0, 0.0, 0.0, 1.0, complex(0.2, 0.1)});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const complex xi(-0.8 + 1.6 * i / (n - 1), -0.8 + 1.6 * j / (n - 1));
        acc += weierstrass_surface(kEuclidean, w, xi).t;
      }
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_weierstrass_mesh)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
