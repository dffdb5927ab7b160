#include <benchmark/benchmark.h>

#include "macpoly/integral.hpp"
#include "macpoly/modified.hpp"
#include "macpoly/quasisym.hpp"

using namespace macpoly;

namespace {

const std::vector<Partition> kShapes{{2, 1}, {2, 2}, {3, 1, 1}, {3, 2, 1}, {2, 2, 1, 1}};

void BM_HtildeHHL(benchmark::State& state) {
  const Partition& lam = kShapes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(htilde_hhl(lam, 3));
}

void BM_HtildeCompact(benchmark::State& state) {
  const Partition& lam = kShapes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(htilde_compact(lam, 3));
}

void BM_JHHL(benchmark::State& state) {
  const Partition& mu = kShapes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(j_hhl(mu, 3));
}

void BM_JCompact(benchmark::State& state) {
  const Partition& mu = kShapes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(j_compact(mu, 3));
}

void BM_PPoly(benchmark::State& state) {
  const Partition lam{2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(p_poly(lam, 4, static_cast<unsigned>(state.range(0))));
}

void BM_GPoly(benchmark::State& state) {
  const Composition g{1, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(g_poly(g, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_HtildeHHL)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HtildeCompact)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JHHL)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JCompact)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PPoly)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GPoly)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
