#include <benchmark/benchmark.h>

#include "jetscheme/census/census.hpp"

namespace {

using namespace jetscheme;

void BM_ExhaustiveCensus(benchmark::State& state) {
  CensusSpec spec;
  spec.a = 2;
  spec.b = static_cast<std::size_t>(state.range(0));
  spec.m = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_census(spec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * spec.space_size()));
}
BENCHMARK(BM_ExhaustiveCensus)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RandomCensus(benchmark::State& state) {
  CensusSpec spec;
  spec.p = 5;
  spec.a = 2;
  spec.b = 3;
  spec.m = 3;
  spec.mode = CensusMode::random;
  spec.count = 2000;
  spec.seed = 3;
  spec.verify_truncation = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_census(spec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * spec.count));
}
BENCHMARK(BM_RandomCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CensusMatrixDecode(benchmark::State& state) {
  CensusSpec spec;
  spec.a = spec.b = 3;
  spec.m = 2;
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(census_matrix(spec, i++ % spec.space_size()));
}
BENCHMARK(BM_CensusMatrixDecode);

}  // namespace

BENCHMARK_MAIN();
