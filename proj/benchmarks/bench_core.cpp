#include <benchmark/benchmark.h>

#include "ccs/automorphisms.hpp"
#include "ccs/classify.hpp"
#include "ccs/constructors.hpp"
#include "ccs/structure.hpp"

using namespace ccs;

static void BM_AutSl25(benchmark::State& state) {
  const auto g = sl25();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_generators(g).order);
}
BENCHMARK(BM_AutSl25)->Unit(benchmark::kMillisecond);

static void BM_AutPauli2(benchmark::State& state) {
  const auto g = pauli(2);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_generators(g).order);
}
BENCHMARK(BM_AutPauli2)->Unit(benchmark::kMillisecond);

static void BM_NormalSubgroupsDihedral(benchmark::State& state) {
  const auto g = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g).size());
}
BENCHMARK(BM_NormalSubgroupsDihedral)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_AllSubgroupsSd64(benchmark::State& state) {
  const auto g = semidihedral(64);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).size());
}
BENCHMARK(BM_AllSubgroupsSd64)->Unit(benchmark::kMillisecond);

static void BM_ClassifyMetacyclic(benchmark::State& state) {
  const auto g = metacyclic6(7, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(classify_ccs(g).clause);
}
BENCHMARK(BM_ClassifyMetacyclic)->Unit(benchmark::kMillisecond);

static void BM_IsCcsMetacyclicLarge(benchmark::State& state) {
  // Order 1456 = 91 * 16.
  const Bounds b = Bounds::with_order(1500);
  const auto g = metacyclic7(91, 2, 4, 34);
  for (auto _ : state) benchmark::DoNotOptimize(is_ccs(g, b).is_ccs);
}
BENCHMARK(BM_IsCcsMetacyclicLarge)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
