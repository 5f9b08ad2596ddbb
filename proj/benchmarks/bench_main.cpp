#include <benchmark/benchmark.h>

#include "orbvar/cycles.hpp"
#include "orbvar/enumeration.hpp"
#include "orbvar/insertion.hpp"
#include "orbvar/orbital.hpp"

using namespace orbvar;

namespace {

const std::vector<SignedPermutation>& group(int n) {
  static std::map<int, std::vector<SignedPermutation>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerateGroup(n)).first;
  return it->second;
}

void BM_RsWholeGroup(benchmark::State& state) {
  const auto& g = group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : g) benchmark::DoNotOptimize(rs(w, LieType::C));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_RsWholeGroup)->DenseRange(3, 6);

void BM_RsInverseWholeGroup(benchmark::State& state) {
  std::vector<TableauPair> pairs;
  for (const auto& w : group(static_cast<int>(state.range(0)))) pairs.push_back(rs(w, LieType::B));
  for (auto _ : state) {
    for (const auto& p : pairs) benchmark::DoNotOptimize(rsInverse(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_RsInverseWholeGroup)->DenseRange(3, 6);

void BM_CyclesOf(benchmark::State& state) {
  std::vector<DominoTableau> lefts;
  for (const auto& w : group(static_cast<int>(state.range(0)))) lefts.push_back(rs(w, LieType::C).left);
  for (auto _ : state) {
    for (const auto& t : lefts) benchmark::DoNotOptimize(cyclesOf(t, Coloring::X));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lefts.size()));
}
BENCHMARK(BM_CyclesOf)->DenseRange(3, 5);

void BM_OrbitalTableau(benchmark::State& state) {
  std::vector<DominoTableau> lefts;
  for (const auto& w : group(static_cast<int>(state.range(0)))) lefts.push_back(rs(w, LieType::C).left);
  for (auto _ : state) {
    for (const auto& t : lefts) benchmark::DoNotOptimize(orbitalTableau(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lefts.size()));
}
BENCHMARK(BM_OrbitalTableau)->DenseRange(3, 5);

void BM_AllTableauxOfRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (const auto& p : shapesOfRank(n, LieType::C)) total += countSDT(p, LieType::C);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_AllTableauxOfRank)->DenseRange(3, 6);

void BM_VerifySuite(benchmark::State& state) {
  VerifyOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verifySuite("pipeline-confluence", static_cast<int>(state.range(0)), LieType::B, options));
}
BENCHMARK(BM_VerifySuite)->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
