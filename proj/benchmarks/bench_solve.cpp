#include <benchmark/benchmark.h>

#include "pdcouple/harness.hpp"
#include "pdcouple/linalg.hpp"

using namespace pdcouple;

static CaseConfig config_for(Method method, int n) {
  CaseConfig c;
  c.method = method;
  c.degree = 3;
  c.grid.m = 2;
  c.grid.ratio = 2.0;
  c.grid.delta = 1.0 / n;
  c.case_name = "quartic";
  return c;
}

static void BM_Assemble(benchmark::State& state, Method method) {
  const CaseConfig c = config_for(method, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_system(c));
}

static void BM_AssembleSolve(benchmark::State& state, Method method) {
  const CaseConfig c = config_for(method, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const AssembledSystem s = build_system(c);
    benchmark::DoNotOptimize(solve(s.matrix, s.rhs));
  }
  state.counters["N"] = static_cast<double>(build_system(c).rhs.size());
}

static void BM_RunCase(benchmark::State& state) {
  const CaseConfig c = config_for(Method::kMdcm, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_case(c));
}

BENCHMARK_CAPTURE(BM_Assemble, mdcm, Method::kMdcm)->RangeMultiplier(2)->Range(8, 128);
BENCHMARK_CAPTURE(BM_AssembleSolve, mdcm, Method::kMdcm)->RangeMultiplier(2)->Range(8, 128);
BENCHMARK_CAPTURE(BM_AssembleSolve, mscm, Method::kMscm)->RangeMultiplier(2)->Range(8, 128);
BENCHMARK_CAPTURE(BM_AssembleSolve, vhcm, Method::kVhcm)->RangeMultiplier(2)->Range(8, 128);
BENCHMARK(BM_RunCase)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_MAIN();
