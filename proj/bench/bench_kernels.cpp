#include <benchmark/benchmark.h>

#include "freelie/automaton.hpp"
#include "freelie/free_finder.hpp"
#include "freelie/props.hpp"
#include "freelie/verifier.hpp"

using namespace freelie;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_CountWords(benchmark::State& state) {
  const auto aut = build_automaton(normalize_presentation(family_A(4)));
  for (auto _ : state) benchmark::DoNotOptimize(count_words(aut, 200, mode(state)));
}
BENCHMARK(BM_CountWords)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OverlapSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::Overlap, 1, mode(state)));
}
BENCHMARK(BM_OverlapSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FindRegularPair(benchmark::State& state) {
  const auto aut = build_automaton(normalize_presentation(family_A(3)));
  for (auto _ : state) benchmark::DoNotOptimize(find_regular_pair(aut, kDefaultCandidateCap, mode(state)));
}
BENCHMARK(BM_FindRegularPair)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FreeSubgroup(benchmark::State& state) {
  const auto aut = build_automaton(normalize_presentation(family_A(3)));
  const auto cert = find_regular_pair(aut);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_free_subgroup(aut, cert, 3, std::nullopt, ExpansionMethod::LeadingTerms, mode(state)));
}
BENCHMARK(BM_FreeSubgroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
