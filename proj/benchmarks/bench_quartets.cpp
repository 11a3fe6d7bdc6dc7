#include <benchmark/benchmark.h>

#include "phylocompat/character_compat.hpp"
#include "phylocompat/constructions.hpp"
#include "phylocompat/quartet_compat.hpp"
#include "phylocompat/quartet_graph.hpp"

using namespace phylocompat;

namespace {

// Q(2,t) has t+2 labels, the largest family brute force reaches at a given label count.
void BM_BruteQst(benchmark::State& state) {
  Taxa taxa;
  const auto q = gen_qst(taxa, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compat_quartets_brute(q).verdict);
}
BENCHMARK(BM_BruteQst)->DenseRange(2, 7);

void BM_UnificationQst(benchmark::State& state) {
  Taxa taxa;
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuartetGraph g(gen_qst(taxa, n / 2, n - n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(find_complete_unification(g).has_value());
}
BENCHMARK(BM_UnificationQst)->DenseRange(4, 9);

// Compatible case: Q(s,t) without q0 always admits a complete sequence.
void BM_UnificationLeaveOneOut(benchmark::State& state) {
  Taxa taxa;
  const auto s = static_cast<std::size_t>(state.range(0));
  auto q = gen_qst(taxa, s, s);
  q.erase(q.begin());
  const QuartetGraph g(q);
  for (auto _ : state) benchmark::DoNotOptimize(find_complete_unification(g).has_value());
}
BENCHMARK(BM_UnificationLeaveOneOut)->DenseRange(2, 5);

void BM_BruteCharacters(benchmark::State& state) {
  Taxa taxa;
  const auto c = gen_minimal_incompatible_characters(taxa, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compat_characters_brute(c).verdict);
}
BENCHMARK(BM_BruteCharacters)->DenseRange(2, 5);

}  // namespace
