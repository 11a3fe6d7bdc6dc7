#include <benchmark/benchmark.h>

#include <string>

#include "phylocompat/enumerate.hpp"

using namespace phylocompat;

namespace {

LabelSet make_labels(Taxa& taxa, std::size_t n) {
  LabelSet labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(taxa.intern("x" + std::to_string(i)));
  return labels;
}

void BM_UnrootedStream(benchmark::State& state) {
  Taxa taxa;
  const auto labels = make_labels(taxa, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    UnrootedBinaryTrees trees(labels);
    std::size_t count = 0;
    while (auto t = trees.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["trees"] = static_cast<double>(unrooted_binary_count(labels.size()));
}
BENCHMARK(BM_UnrootedStream)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_RootedStream(benchmark::State& state) {
  Taxa taxa;
  const auto labels = make_labels(taxa, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    RootedBinaryTrees trees(labels);
    std::size_t count = 0;
    while (auto t = trees.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["trees"] = static_cast<double>(rooted_binary_count(labels.size()));
}
BENCHMARK(BM_RootedStream)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
