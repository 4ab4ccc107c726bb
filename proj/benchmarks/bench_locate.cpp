#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bench_common.hpp"
#include "stpd/stcolex_index.hpp"
#include "stpd/stlex_tree.hpp"

namespace {

using namespace stpd;

constexpr pos_t kTextSize = 1 << 17;

void BM_stcolex_locate_all(benchmark::State& state) {
  const Text t = bench::make_input(kTextSize);
  const StColexIndex idx = StColexIndex::build(t);
  std::mt19937_64 rng(13);
  const pos_t m = state.range(0);
  std::vector<std::vector<sym_t>> patterns;
  for (int k = 0; k < 64; ++k) patterns.push_back(bench::sample_pattern(t, m, rng));
  std::size_t occ = 0, queries = 0;
  for (auto _ : state) {
    for (const auto& p : patterns) {
      occ += idx.locate_all(p).size();
      ++queries;
    }
  }
  state.counters["occ/query"] = benchmark::Counter(double(occ) / double(queries));
}
BENCHMARK(BM_stcolex_locate_all)->Arg(16)->Arg(128)->Arg(1024);

void BM_stlex_locate_all(benchmark::State& state) {
  const Text t = bench::make_input(kTextSize);
  const StLexTree tree = StLexTree::build(t);
  std::mt19937_64 rng(13);
  const pos_t m = state.range(0);
  std::vector<std::vector<sym_t>> patterns;
  for (int k = 0; k < 64; ++k) patterns.push_back(bench::sample_pattern(t, m, rng));
  for (auto _ : state) {
    for (const auto& p : patterns) benchmark::DoNotOptimize(tree.locate_all(p));
  }
}
BENCHMARK(BM_stlex_locate_all)->Arg(16)->Arg(128)->Arg(1024);

void BM_stcolex_locate_primary(benchmark::State& state) {
  const Text t = bench::make_input(kTextSize);
  const StColexIndex idx = StColexIndex::build(t);
  std::mt19937_64 rng(13);
  const pos_t m = state.range(0);
  std::vector<std::vector<sym_t>> patterns;
  for (int k = 0; k < 64; ++k) patterns.push_back(bench::sample_pattern(t, m, rng));
  for (auto _ : state) {
    for (const auto& p : patterns) benchmark::DoNotOptimize(idx.locate_primary(p));
  }
}
BENCHMARK(BM_stcolex_locate_primary)->Arg(16)->Arg(128)->Arg(1024);

}  // namespace
