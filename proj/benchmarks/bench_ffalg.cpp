#include <benchmark/benchmark.h>

#include <random>

#include "ffalg/barnes.hpp"
#include "ffalg/tower.hpp"

using namespace ffalg;

// args: 2n, l
static void BM_QuotientDims(benchmark::State& state) {
  const int two_n = static_cast<int>(state.range(0)), ell = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(quotient_dims(two_n, ell, 6));
}
BENCHMARK(BM_QuotientDims)->Args({2, 1})->Args({4, 1})->Args({4, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_BuildLevel(benchmark::State& state) {
  TowerSpec s;
  s.m = 1;
  s.r = 1;
  s.index.I = {1};
  s.z_order = 1;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_level(s, n));
}
BENCHMARK(BM_BuildLevel)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_CheckTower(benchmark::State& state) {
  TowerSpec s;
  s.m = 2;
  s.r = 1;
  s.index.I = {1};
  for (auto _ : state) benchmark::DoNotOptimize(check_tower(s, 4));
}
BENCHMARK(BM_CheckTower)->Unit(benchmark::kMillisecond);

static void BM_LogGamma2Inv(benchmark::State& state) {
  Gamma2Config cfg;
  cfg.N = static_cast<int>(state.range(0));
  Complex z(1.3, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma2_inv(z, cfg));
    z += Complex(1e-9, 0);
  }
}
BENCHMARK(BM_LogGamma2Inv)->Arg(50)->Arg(200)->Arg(800);

static void BM_ZetaMin(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta_min(Complex(0.3, 0.1)));
}
BENCHMARK(BM_ZetaMin);

static void BM_OddDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LaurentPoly f = elem_sym(1, n);
  for (int k = 2; k <= n; ++k) f = f * (elem_sym(k, n) + complete_sym(k, n));
  for (auto _ : state) benchmark::DoNotOptimize(odd_decompose(f));
  state.counters["terms"] = static_cast<double>(f.size());
}
BENCHMARK(BM_OddDecompose)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
