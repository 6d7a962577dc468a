#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "dimlab/catalog.hpp"
#include "dimlab/filtration.hpp"
#include "dimlab/graded.hpp"
#include "dimlab/linalg.hpp"
#include "dimlab/series.hpp"
#include "dimlab/verifier.hpp"

namespace {

using namespace dimlab;

const std::vector<std::string> kGroups{"D8", "D16", "S4", "Heis27"};

RingSpec ring_for(int index) {
  switch (index) {
    case 0: return RingSpec::rationals();
    case 1: return RingSpec::integers();
    default: return RingSpec::prime_field(static_cast<std::uint64_t>(index));
  }
}

void BM_DeltaFiltration(benchmark::State& state) {
  const NSeries n = lower_central_nseries(get_group(kGroups[state.range(0)]));
  const RingSpec ring = ring_for(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_filtration(n, ring, 8));
  state.SetLabel(kGroups[state.range(0)] + " " + ring.to_string());
}
BENCHMARK(BM_DeltaFiltration)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_DeltaBruteforce(benchmark::State& state) {
  const NSeries n = lower_central_nseries(get_group(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(delta_bruteforce(n, RingSpec::prime_field(2), 5));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_DeltaBruteforce)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_LazardSeries(benchmark::State& state) {
  const NSeries n = lower_central_nseries(get_group(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(lazard_series(n, 2));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_LazardSeries)->DenseRange(0, 3);

void BM_GradedAlgebra(benchmark::State& state) {
  const FiniteGroup g = get_group("Heis27");
  const FiltrationBasis f = delta_filtration(lower_central_nseries(g), RingSpec::prime_field(3), 10);
  for (auto _ : state) benchmark::DoNotOptimize(graded_algebra(f).dimensions());
}
BENCHMARK(BM_GradedAlgebra)->Unit(benchmark::kMillisecond);

void BM_SmithInvariants(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->RangeMultiplier(2)->Range(4, 32);

void BM_VerifyAll(benchmark::State& state) {
  const auto jobs = default_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(jobs).failed());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
