#include <benchmark/benchmark.h>

#include "almoststable/budgeted_search.h"
#include "almoststable/classic.h"
#include "almoststable/constructions.h"
#include "almoststable/exact.h"
#include "almoststable/localsearch.h"
#include "almoststable/random_instances.h"
#include "almoststable/shortlist.h"

namespace as = almoststable;

namespace {

// Odd cycle where every agent prefers its successor: never solvable.
as::Instance odd_cycle(int n) {
  std::vector<std::vector<as::AgentId>> prefs(n);
  for (int i = 0; i < n; ++i) prefs[i] = {(i + 1) % n, (i + n - 1) % n};
  return as::Instance(as::InstanceKind::kSri, std::move(prefs));
}

void BM_ShortlistOddCycle(benchmark::State& state) {
  as::Instance inst = odd_cycle(static_cast<int>(state.range(0)) | 1);
  for (auto _ : state) benchmark::DoNotOptimize(as::solve_minimax_sri_deg2(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShortlistOddCycle)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_Irving(benchmark::State& state) {
  as::Instance inst = as::gen_random(static_cast<int>(state.range(0)), 10,
                                     as::InstanceKind::kSri, 1);
  for (auto _ : state) benchmark::DoNotOptimize(as::irving(inst));
}
BENCHMARK(BM_Irving)->Arg(100)->Arg(1000)->Arg(10000);

void BM_MaxMatching(benchmark::State& state) {
  as::Instance inst = as::gen_random(static_cast<int>(state.range(0)), 5,
                                     as::InstanceKind::kSri, 2);
  for (auto _ : state) benchmark::DoNotOptimize(as::max_matching(inst));
}
BENCHMARK(BM_MaxMatching)->Arg(100)->Arg(1000)->Arg(5000);

void BM_Approx(benchmark::State& state) {
  as::Instance inst = as::build_prop34(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(as::approx_minimax_sri(inst));
}
BENCHMARK(BM_Approx)->DenseRange(2, 5);

void BM_ExactNested(benchmark::State& state) {
  as::Instance inst = as::build_prop34(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        as::solve_exact(inst, as::Objective::kMinimax, as::Cardinality::kAny));
  }
}
BENCHMARK(BM_ExactNested);

void BM_BudgetedFifty(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    as::Instance inst = as::gen_random(50, static_cast<int>(state.range(0)),
                                       as::InstanceKind::kSri, seed++);
    benchmark::DoNotOptimize(as::solve_minimax_budgeted(inst, as::Cardinality::kAny));
  }
}
BENCHMARK(BM_BudgetedFifty)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
