#include "mmpair/catalog.hpp"
#include "mmpair/constructors.hpp"
#include "mmpair/search.hpp"

#include <benchmark/benchmark.h>

using namespace mmpair;

static void BM_Commutator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = Rational(static_cast<long>(i + 2 * j) - 3, 1 + static_cast<long>(j % 3));
      b(i, j) = Rational(static_cast<long>(i * j % 5) - 2, 1 + static_cast<long>(i % 2));
    }
  for (auto _ : state) benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_Commutator)->Arg(8)->Arg(16)->Arg(64);

static void BM_CheckMM(benchmark::State& state, const char* algebra) {
  const MapTriple t = lr_pair(named_algebra(algebra));
  const SweepOptions opts{static_cast<unsigned>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(check_mm(t, opts));
}
BENCHMARK_CAPTURE(BM_CheckMM, m2, "m2")->Arg(1);
BENCHMARK_CAPTURE(BM_CheckMM, octonions, "octonions")->Arg(1)->Arg(4);

static void BM_Suite(benchmark::State& state, const char* algebra) {
  const MapTriple t = lr_pair(named_algebra(algebra));
  const SweepOptions opts{static_cast<unsigned>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(t, opts));
}
BENCHMARK_CAPTURE(BM_Suite, m2, "m2")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, octonions, "octonions")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SearchNumeric(benchmark::State& state) {
  const auto sl2 = named_algebra("sl2");
  SearchOptions opts;
  opts.strategy = SearchStrategy::numeric;
  for (auto _ : state) benchmark::DoNotOptimize(ansatz_search({sl2, sl2, {LinearMap::identity(sl2)}}, opts));
}
BENCHMARK(BM_SearchNumeric)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
