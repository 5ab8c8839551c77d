// Serial reference kernels against their OpenMP counterparts on the same inputs.
// Thread count follows OMP_NUM_THREADS / RPYS_THREADS.

#include <benchmark/benchmark.h>

#include <map>

#include "rpys/dedup.hpp"
#include "rpys/indicators.hpp"
#include "rpys/parallel.hpp"
#include "synth.hpp"

namespace {

using namespace rpys;

const std::vector<CitedRefVariant>& variants(std::size_t n) {
  static std::map<std::size_t, std::vector<CitedRefVariant>> cache;
  auto& v = cache[n];
  if (v.empty()) {
    synth::Rng rng(11);
    v = synth::typo_variants(rng, n);
  }
  return v;
}

const CitationMatrix& matrix(std::size_t distinct) {
  static std::map<std::size_t, CitationMatrix> cache;
  auto it = cache.find(distinct);
  if (it == cache.end()) {
    synth::Rng rng(12);
    it = cache.emplace(distinct, build_matrix(synth::zipf_corpus(rng, distinct, {1980, 2017}, 500, 20000),
                                              {1980, 2017}))
             .first;
  }
  return it->second;
}

void BM_MatchEdgesSerial(benchmark::State& state) {
  const auto& v = variants(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::match_edges_serial(v, ClusterConfig{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MatchEdgesParallel(benchmark::State& state) {
  const auto& v = variants(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::match_edges_parallel(v, ClusterConfig{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NTopSerial(benchmark::State& state) {
  const auto& m = matrix(static_cast<std::size_t>(state.range(0)));
  const PercentileConfig cfg{Fraction(1, 100), 2};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::n_top_all_serial(m, cfg, {1980, 2017}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NTopParallel(benchmark::State& state) {
  const auto& m = matrix(static_cast<std::size_t>(state.range(0)));
  const PercentileConfig cfg{Fraction(1, 100), 2};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::n_top_all_parallel(m, cfg, {1980, 2017}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_MatchEdgesSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatchEdgesParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NTopSerial)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NTopParallel)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  rpys::configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
