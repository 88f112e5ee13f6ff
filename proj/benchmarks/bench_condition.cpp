#include <benchmark/benchmark.h>

#include <random>

#include "pdcouple/harness.hpp"
#include "pdcouple/linalg.hpp"

using namespace pdcouple;

static void BM_ConditionRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dist(rng) + (i == j ? n : 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(condition_number_2(m));
}

static void BM_ConditionCoupled(benchmark::State& state) {
  CaseConfig c;
  c.method = Method::kVhcm;
  c.degree = 3;
  c.grid.m = 2;
  c.grid.ratio = 5.0;
  c.grid.delta = 2.0 / (5.0 * static_cast<double>(state.range(0)));
  c.case_name = "quartic";
  const AssembledSystem s = build_system(c);
  for (auto _ : state) benchmark::DoNotOptimize(condition_number_2(s.matrix));
  state.counters["N"] = static_cast<double>(s.rhs.size());
}

BENCHMARK(BM_ConditionRandom)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_ConditionCoupled)->DenseRange(4, 16, 4);
