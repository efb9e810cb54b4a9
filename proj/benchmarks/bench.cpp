#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "persym/bit_matrix.hpp"
#include "persym/census.hpp"

using namespace persym;

namespace {

void BM_RankOfWords(benchmark::State& state) {
  std::mt19937_64 gen(7);
  const auto rows = static_cast<std::size_t>(state.range(0));
  std::vector<Word> words(rows);
  for (auto _ : state) {
    for (auto& w : words) w = gen();
    benchmark::DoNotOptimize(rank_of_words(words));
  }
}
BENCHMARK(BM_RankOfWords)->Arg(4)->Arg(8)->Arg(32)->Arg(64);

void BM_BitMatrixRank(benchmark::State& state) {
  std::mt19937_64 gen(11);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = BitMatrix::generate(n, n, [&](std::size_t, std::size_t) { return (gen() & 1) != 0; });
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_BitMatrixRank)->Arg(64)->Arg(256)->Arg(1024);

void BM_EnumGamma(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  CensusOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enum_gamma(s, s, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * s - 1)));
}
BENCHMARK(BM_EnumGamma)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EnumStacked(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CensusOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(enum_stacked_gamma(n, 2, 4, opts));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (6 + 4 * n)));
}
BENCHMARK(BM_EnumStacked)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
