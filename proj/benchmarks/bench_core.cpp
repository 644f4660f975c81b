#include <benchmark/benchmark.h>

#include "triodyn/graphs.hpp"
#include "triodyn/harness.hpp"
#include "triodyn/orderings.hpp"
#include "triodyn/plinear.hpp"
#include "triodyn/structure.hpp"

using namespace triodyn;

namespace {

void BM_ForcedPatterns(benchmark::State& state) {
  const Pattern p = construct_unimodal_slow(2, 9, 0);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(forced_patterns(p, cap));
}
BENCHMARK(BM_ForcedPatterns)->DenseRange(9, 13, 2)->Unit(benchmark::kMillisecond);

void BM_RotationSet(benchmark::State& state) {
  const ColoredGraph g = point_graph(construct_unimodal_slow(3, static_cast<int>(state.range(0)), 0));
  for (auto _ : state) benchmark::DoNotOptimize(rotation_set(g));
}
BENCHMARK(BM_RotationSet)->Arg(10)->Arg(20)->Arg(40);

void BM_ElementaryLoops(benchmark::State& state) {
  const ColoredGraph g = point_graph(construct_unimodal_slow(2, 9, 0));
  for (auto _ : state) {
    std::size_t n = 0;
    elementary_loops(g, [&](const Loop&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_ElementaryLoops);

void BM_IsExact(benchmark::State& state) {
  const Pattern p = construct_unimodal_fast(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_exact(p));
}
BENCHMARK(BM_IsExact)->Args({3, 8})->Args({5, 13})->Args({7, 20});

void BM_EnumerateRegular(benchmark::State& state) {
  EnumerationFilter f;
  f.regular = true;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(n, f));
}
BENCHMARK(BM_EnumerateRegular)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_VerifySlowOrdering(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_ordering(RotationClass::slow, 6, 12));
}
BENCHMARK(BM_VerifySlowOrdering)->Unit(benchmark::kMillisecond);

void BM_SlowRank(benchmark::State& state) {
  std::int64_t n = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(slow_rank(n));
    n = n == 1000000 ? 4 : n + 1;
  }
}
BENCHMARK(BM_SlowRank);

}  // namespace

BENCHMARK_MAIN();
