#include <benchmark/benchmark.h>

#include "digraph_spectra/bounds.hpp"
#include "digraph_spectra/families.hpp"
#include "digraph_spectra/spectral.hpp"

namespace {

using namespace dgs;

void BM_Eigenvalues(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = random_digraph(n, 0.2, RngSeed{12345});
  AlphaMatrix M = build_alpha_matrix(g, Alpha::of(0.5));
  for (auto _ : state) {
    auto s = eigenvalues(M);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_BoundReport(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = random_k_regular(n, 6, RngSeed{7});
  for (auto _ : state) {
    auto r = make_bound_report(g, Alpha::of(0.3));
    benchmark::DoNotOptimize(r.energy_upper_km);
  }
}
BENCHMARK(BM_BoundReport)->Arg(32)->Arg(64)->Arg(128);

void BM_NormalityCheck(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Digraph g = rotational_tournament(n | 1);
  for (auto _ : state) {
    auto v = is_normal_topological(g, Alpha::rational(1, 3));
    benchmark::DoNotOptimize(v.topological);
  }
}
BENCHMARK(BM_NormalityCheck)->Arg(31)->Arg(63)->Arg(127);

void BM_CoreCompleteGeneration(benchmark::State& state) {
  CoreCompleteParams p{static_cast<int>(state.range(0)), 5, 0.4,
                       2 * static_cast<int>(state.range(0))};
  std::uint64_t i = 0;
  for (auto _ : state) {
    auto g = core_complete_random(p, child_seed(RngSeed{1}, i++));
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_CoreCompleteGeneration)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
