#include <benchmark/benchmark.h>

#include "treeqi/census.hpp"
#include "treeqi/colored_graph.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(treeqi::enumerate_gamma_trees(2, k));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(treeqi::enumerate_gamma_trees_parallel(2, k, jobs));
}

void BM_Census(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(treeqi::census(2, 8, {true, jobs}));
}

void BM_CanonicalForm(benchmark::State& state) {
  treeqi::Rng rng(1);
  const auto tree = treeqi::random_gamma_tree(3, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(treeqi::canonical_form(tree, true));
}

void BM_Minimize(benchmark::State& state) {
  treeqi::Rng rng(2);
  const auto tree = treeqi::random_gamma_tree(2, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(treeqi::minimize(tree));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({7, 2})->Args({7, 4})->Args({8, 2})->Args({8, 4})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(40)->Arg(160);
BENCHMARK(BM_Minimize)->Arg(10)->Arg(40)->Arg(160);

BENCHMARK_MAIN();
