#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>

#include "phylocompat/constructions.hpp"
#include "phylocompat/sampling.hpp"
#include "phylocompat/triplet_compat.hpp"

using namespace phylocompat;

namespace {

std::vector<Triplet> displayed(Taxa& taxa, std::size_t n, std::size_t count) {
  std::mt19937_64 rng(7);
  LabelSet labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(taxa.intern("x" + std::to_string(i)));
  // A binary tree displays exactly one triplet per label triple.
  const std::size_t triples = n * (n - 1) * (n - 2) / 6;
  return random_displayed_triplets(rng, random_rooted_binary(rng, labels), std::min(count, triples));
}

void BM_BuildDisplayed(benchmark::State& state) {
  Taxa taxa;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = displayed(taxa, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(build_compat(r).verdict);
}
BENCHMARK(BM_BuildDisplayed)->DenseRange(6, 18, 4);

void BM_SubsetSweepDisplayed(benchmark::State& state) {
  Taxa taxa;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = displayed(taxa, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(compat_triplets_subset_sweep(r).verdict);
}
BENCHMARK(BM_SubsetSweepDisplayed)->DenseRange(6, 12, 2);

void BM_BruteDisplayed(benchmark::State& state) {
  Taxa taxa;
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = displayed(taxa, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(compat_triplets_brute(r).verdict);
}
BENCHMARK(BM_BruteDisplayed)->DenseRange(4, 7);

// Polynomial path on large inputs: the tight family with its last triplet dropped is compatible.
void BM_BuildTightRest(benchmark::State& state) {
  Taxa taxa;
  auto r = gen_tight_triplets(taxa, static_cast<std::size_t>(state.range(0)));
  r.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(build_compat(r).verdict);
}
BENCHMARK(BM_BuildTightRest)->RangeMultiplier(4)->Range(16, 1024);

void BM_ExtractTight(benchmark::State& state) {
  Taxa taxa;
  const auto r = gen_tight_triplets(taxa, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_incompatible_subset(r).size());
}
BENCHMARK(BM_ExtractTight)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
