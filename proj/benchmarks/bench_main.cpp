#include <benchmark/benchmark.h>

#include <random>

#include "stix/digraph.hpp"
#include "stix/extremal.hpp"
#include "stix/random.hpp"
#include "stix/search.hpp"
#include "stix/stable_index.hpp"

using namespace stix;

static void BM_BoolProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = random_matrix(n, 0.1, rng);
  const auto b = random_matrix(n, 0.1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bool_product(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BoolProduct)->RangeMultiplier(4)->Range(8, 512)->Complexity();

static void BM_CappedProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const CappedMatrix a(random_matrix(n, 0.1, rng));
  const CappedMatrix b(random_matrix(n, 0.1, rng));
  for (auto _ : state) benchmark::DoNotOptimize(capped_product(a, b));
}
BENCHMARK(BM_CappedProduct)->RangeMultiplier(4)->Range(8, 512);

// theta of the first census digraph at order n (theta = g(n) capped powers).
static void BM_StableIndexCensus(benchmark::State& state) {
  const auto n = state.range(0);
  const auto spec = extremal_census(n).family.front();
  const auto a = to_matrix(build_glasses(spec.p, spec.k, spec.q).digraph);
  for (auto _ : state) benchmark::DoNotOptimize(stable_index(a));
  state.counters["theta"] = static_cast<double>(g_of(n));
}
BENCHMARK(BM_StableIndexCensus)->DenseRange(8, 24, 8)->Arg(64)->Arg(128);

static void BM_CycleDetect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = circulant(n);
  for (auto _ : state) benchmark::DoNotOptimize(stable_index(a, HorizonPolicy::cycle_detect()));
}
BENCHMARK(BM_CycleDetect)->Arg(8)->Arg(32)->Arg(128);

// Raw kernel throughput: one 2^16-code slice of the n = 5 space.
static void BM_PackedScan(benchmark::State& state) {
  SearchOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_s(5, {static_cast<std::uint64_t>(state.range(0)), 512}, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << 25) / 512);
}
BENCHMARK(BM_PackedScan)->Arg(0)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const auto a = random_matrix(n, 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(a));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 8, 2);

static void BM_IsomorphismGlasses(benchmark::State& state) {
  const auto g = build_glasses(4, 3, 5).digraph;
  std::mt19937_64 rng(4);
  const auto h = from_matrix(permute(to_matrix(g), random_permutation(10, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(g, h));
}
BENCHMARK(BM_IsomorphismGlasses);
BENCHMARK_MAIN();
