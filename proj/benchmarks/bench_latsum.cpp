#include <benchmark/benchmark.h>

#include <complex>

#include "latsum/cylsum.hpp"
#include "latsum/eisenstein.hpp"
#include "latsum/modular.hpp"
#include "latsum/oracle.hpp"

using namespace latsum;

static void BM_DedekindEta(benchmark::State& state) {
  const complex_t tau{0.3, 0.2};  // forces a reduction chain
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_eta(tau));
}
BENCHMARK(BM_DedekindEta);

static void BM_SigmaFourier(benchmark::State& state) {
  const complex_t tau{0.3, 1.2};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma(4, m, tau).value);
}
BENCHMARK(BM_SigmaFourier)->Arg(4)->Arg(8)->Arg(16);

static void BM_SigmaHyper(benchmark::State& state) {
  const complex_t tau{0.3, 1.2};
  for (auto _ : state) benchmark::DoNotOptimize(sigma(8, 2, tau).value);
}
BENCHMARK(BM_SigmaHyper);

static void BM_SZeroBuild(benchmark::State& state) {
  const LatticeSpec spec({0.3, 1.2}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(S_zero(1, 5, spec).terms.size());
}
BENCHMARK(BM_SZeroBuild);

static void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    for (int l = 0; l <= 4; ++l) benchmark::DoNotOptimize(oracle::bessel_j(l, x + 0.37 * l));
  }
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(12)->Arg(300);

static void BM_OracleSigmaDirect(benchmark::State& state) {
  const LatticeSpec spec({0.0, 1.0}, 1.0);
  const double radius = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto rep = oracle::sigma_direct(spec, radius, 4, 4);
    benchmark::DoNotOptimize(rep.value);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(3.14159 * radius * radius));
}
BENCHMARK(BM_OracleSigmaDirect)->Arg(50)->Arg(200);

static void BM_OracleSDirect(benchmark::State& state) {
  const LatticeSpec spec({0.0, 1.0}, 1.0);
  const double kmax = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto rep = oracle::S_direct(spec, kmax, 2, 4, 2, 0.1);
    benchmark::DoNotOptimize(rep.value);
  }
}
BENCHMARK(BM_OracleSDirect)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
