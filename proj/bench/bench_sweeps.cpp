// Serial reference vs OpenMP kernels for the verification sweeps.

#include <benchmark/benchmark.h>

#include "treelab/heap.hpp"
#include "treelab/oracle.hpp"
#include "treelab/potential_ledger.hpp"

using namespace treelab;

static void BM_WorstCaseScanSerial(benchmark::State& state) {
  const auto kinds = ledger::standard_inputs(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ledger::worst_case_scan_serial(state.range(0), kinds));
  }
}
BENCHMARK(BM_WorstCaseScanSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_WorstCaseScanOmp(benchmark::State& state) {
  const auto kinds = ledger::standard_inputs(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ledger::worst_case_scan(state.range(0), kinds));
  }
}
BENCHMARK(BM_WorstCaseScanOmp)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_AggregateSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heap::aggregate_sweep_serial(state.range(0)));
}
BENCHMARK(BM_AggregateSweepSerial)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_AggregateSweepOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heap::aggregate_sweep(state.range(0)));
}
BENCHMARK(BM_AggregateSweepOmp)->Arg(1000000)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_HeapOracleSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::heap_worst_cost_oracle_serial(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_HeapOracleSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_HeapOracleOmp(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::heap_worst_cost_oracle(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_HeapOracleOmp)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
