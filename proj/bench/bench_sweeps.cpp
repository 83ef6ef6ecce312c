// Serial versus OpenMP paths of the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "esakia/constructions/separation.hpp"
#include "esakia/constructions/staged.hpp"
#include "esakia/order_open.hpp"
#include "esakia/toolkit/enumerate.hpp"

using namespace esakia;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_EnumeratePosets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets_uncached(n, mode(state)));
}

std::vector<FinitePoset> trees(int n) {
  std::vector<FinitePoset> out;
  for (int k = 1; k <= n; ++k)
    for (const FinitePoset& p : enumerate_posets(k))
      if (is_tree(p)) out.push_back(p);
  return out;
}

void BM_StagedSweep(benchmark::State& state) {
  const std::vector<FinitePoset> ts = trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto ok = sweep<int>(ts.size(), [&](std::size_t i) {
      const StagedTopology st = staged_topology(ts[i]);
      return downset_open_check(st).holds() ? 1 : 0;
    }, mode(state));
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ts.size()));
}

void BM_OrderOpenSweep(benchmark::State& state) {
  std::vector<FinitePoset> ps;
  for (int k = 1; k <= state.range(0); ++k)
    for (const FinitePoset& p : enumerate_posets(k)) ps.push_back(p);
  for (auto _ : state) {
    auto counts = sweep<std::size_t>(ps.size(), [&](std::size_t i) { return order_open_family(ps[i]).count(); },
                                     mode(state));
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

}  // namespace

BENCHMARK(BM_EnumeratePosets)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StagedSweep)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderOpenSweep)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
