#include <benchmark/benchmark.h>

#include "jetscheme/census/census.hpp"
#include "jetscheme/linalg/smith.hpp"

namespace {

using namespace jetscheme;

// A fixed pool of random matrices per shape so iterations do not pay for generation.
std::vector<JetMatrix<ModP>> pool(std::size_t n, int m, std::uint32_t p) {
  CensusSpec spec;
  spec.p = p;
  spec.a = spec.b = n;
  spec.m = m;
  spec.mode = CensusMode::random;
  spec.count = 256;
  spec.seed = 7;
  std::vector<JetMatrix<ModP>> out;
  for (std::uint64_t i = 0; i < spec.count; ++i) out.push_back(census_matrix(spec, i));
  return out;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mats = pool(n, static_cast<int>(state.range(1)), 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(mats[i++ % mats.size()]));
}
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{2, 4, 8}, {2, 6}});

void BM_MinorsVanish(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mats = pool(n, 3, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minors_vanish(mats[i++ % mats.size()], n));
}
BENCHMARK(BM_MinorsVanish)->DenseRange(2, 5);

void BM_TypeByMinorOrders(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mats = pool(n, 2, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(type_by_minor_orders(mats[i++ % mats.size()]));
}
BENCHMARK(BM_TypeByMinorOrders)->DenseRange(2, 4);

void BM_ModuleKernelDim(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mats = pool(n, static_cast<int>(state.range(1)), 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(module_kernel_dim(mats[i++ % mats.size()]));
}
BENCHMARK(BM_ModuleKernelDim)->ArgsProduct({{2, 4}, {2, 6}});

}  // namespace
