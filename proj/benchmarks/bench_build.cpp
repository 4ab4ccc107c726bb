#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "stpd/stcolex_index.hpp"
#include "stpd/stlex_tree.hpp"
#include "stpd/suffix_sort.hpp"

namespace {

using namespace stpd;

void BM_suffix_sort(benchmark::State& state) {
  const Text t = bench::make_input(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sa(t));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_suffix_sort)->Range(1 << 12, 1 << 18);

void BM_stcolex_build(benchmark::State& state) {
  const Text t = bench::make_input(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(StColexIndex::build(t));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_stcolex_build)->Range(1 << 12, 1 << 16);

void BM_stlex_build(benchmark::State& state) {
  const Text t = bench::make_input(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(StLexTree::build(t));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_stlex_build)->Range(1 << 12, 1 << 16);

}  // namespace
