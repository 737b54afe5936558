// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The chebtrace Authors

#include <benchmark/benchmark.h>

#include "chebtrace/coefficients.hpp"
#include "chebtrace/eigen_solver.hpp"
#include "chebtrace/function_spec.hpp"
#include "chebtrace/graph.hpp"
#include "chebtrace/kernels.hpp"
#include "chebtrace/nbw.hpp"
#include "chebtrace/trace.hpp"
#include "chebtrace/zeta.hpp"

namespace {

using namespace chebtrace;

RegularGraph bench_graph(benchmark::State& state) {
  return random_regular(static_cast<std::size_t>(state.range(0)), 4, 17);
}

void BM_NbwMatrices(benchmark::State& state) {
  const auto g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(nbw_matrices_int(g, 12));
}
BENCHMARK(BM_NbwMatrices)->Arg(32)->Arg(128)->Arg(256);

void BM_CircuitCounts(benchmark::State& state) {
  const auto g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(circuit_counts(g, 12, CircuitRoute::Both));
}
BENCHMARK(BM_CircuitCounts)->Arg(32)->Arg(128);

void BM_JacobiEigen(benchmark::State& state) {
  const auto a = adjacency_matrix(bench_graph(state));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_symmetric(a));
}
BENCHMARK(BM_JacobiEigen)->Arg(32)->Arg(64)->Arg(128);

void BM_CoeffsExp(benchmark::State& state) {
  const auto h = FunctionSpec::exp(0.5);
  const auto basis = Basis::Xq(3);
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_a(h, basis, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CoeffsExp)->Arg(16)->Arg(64);

void BM_PrimeClasses(benchmark::State& state) {
  const auto g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(prime_circuit_classes(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PrimeClasses)->Arg(8)->Arg(12);

void BM_TraceFormula(benchmark::State& state) {
  const auto g = bench_graph(state);
  const auto h = FunctionSpec::exp(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(trace_formula(g, h));
}
BENCHMARK(BM_TraceFormula)->Arg(32)->Arg(64);

void BM_HeatOperator(benchmark::State& state) {
  const auto g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(heat_operator(g, 1.0));
}
BENCHMARK(BM_HeatOperator)->Arg(32)->Arg(128);

void BM_ZetaLogSeries(benchmark::State& state) {
  const auto g = bench_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_log_series(g, 10));
}
BENCHMARK(BM_ZetaLogSeries)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
