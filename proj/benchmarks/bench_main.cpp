#include <benchmark/benchmark.h>

#include "eulerstrat/fuzz.hpp"

using namespace eulerstrat;

namespace {

// A chain of n strata with every pair comparable, the worst case for the
// triangular recursions.
LinkSystem full_chain(std::size_t n) {
  std::vector<StratumSpec> strata;
  std::vector<OrderPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    strata.push_back({"s" + std::to_string(1000 + i), static_cast<Int>(i), 1});
    if (i) pairs.push_back({strata[i - 1].id, strata[i].id});
  }
  auto p = build_poset(strata, pairs);
  std::vector<LinkEntry> links;
  for (const auto& rel : p->relations()) links.push_back({rel.lower, rel.upper, 1, std::nullopt});
  return LinkSystem(p, links);
}

void BM_InvertUnipotent(benchmark::State& state) {
  const auto links = full_chain(static_cast<std::size_t>(state.range(0)));
  const auto a = ic_transition_matrix(links);
  for (auto _ : state) benchmark::DoNotOptimize(invert_unipotent(a));
}
BENCHMARK(BM_InvertUnipotent)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_DecomposeIc(benchmark::State& state) {
  const auto links = full_chain(static_cast<std::size_t>(state.range(0)));
  const auto alpha = constant(links.space(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_ic(links, alpha));
}
BENCHMARK(BM_DecomposeIc)->Arg(8)->Arg(16)->Arg(32);

void BM_KDecompose(benchmark::State& state) {
  const auto links = full_chain(static_cast<std::size_t>(state.range(0)));
  const auto stalks = constant(links.space(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(k_decompose(stalks, links));
}
BENCHMARK(BM_KDecompose)->Arg(8)->Arg(16)->Arg(32);

void BM_FuzzTrial(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    FuzzOptions options;
    options.max_strata = static_cast<std::size_t>(state.range(0));
    options.trials = 1;
    options.seed = seed++;
    benchmark::DoNotOptimize(run_fuzz(options));
  }
}
BENCHMARK(BM_FuzzTrial)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
