#include "phylocompat/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "phylocompat/enumerate.hpp"
#include "phylocompat/tree_ops.hpp"

namespace phylocompat {

namespace {

std::vector<Quartet> all_quartets(std::span<const Label> l) {
  std::vector<Quartet> out;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = k + 1; m < n; ++m) {
          out.emplace_back(l[i], l[j], l[k], l[m]);
          out.emplace_back(l[i], l[k], l[j], l[m]);
          out.emplace_back(l[i], l[m], l[j], l[k]);
        }
  return out;
}

std::vector<Triplet> all_triplets(std::span<const Label> l) {
  std::vector<Triplet> out;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        out.emplace_back(l[i], l[j], l[k]);
        out.emplace_back(l[i], l[k], l[j]);
        out.emplace_back(l[j], l[k], l[i]);
      }
  return out;
}

template <class T>
std::vector<T> pick(std::mt19937_64& rng, std::vector<T> pool, std::size_t count) {
  if (count > pool.size()) throw std::invalid_argument("not enough distinct constraints to sample from");
  // Partial Fisher-Yates keeps the draw independent of the standard library's shuffle.
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
    std::swap(pool[i], pool[d(rng)]);
  }
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(count), pool.end());
  return pool;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t total) {
  return std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
}

}  // namespace

UnrootedTree random_unrooted_binary(std::mt19937_64& rng, std::span<const Label> labels) {
  return unrooted_binary_tree(labels, draw(rng, unrooted_binary_count(labels.size())));
}

RootedTree random_rooted_binary(std::mt19937_64& rng, std::span<const Label> labels) {
  return rooted_binary_tree(labels, draw(rng, rooted_binary_count(labels.size())));
}

std::vector<Quartet> random_quartets(std::mt19937_64& rng, std::span<const Label> labels, std::size_t count) {
  return pick(rng, all_quartets(labels), count);
}

std::vector<Triplet> random_triplets(std::mt19937_64& rng, std::span<const Label> labels, std::size_t count) {
  return pick(rng, all_triplets(labels), count);
}

std::vector<Quartet> random_displayed_quartets(std::mt19937_64& rng, const UnrootedTree& tree, std::size_t count) {
  auto pool = all_quartets(tree.labels());
  std::erase_if(pool, [&](const Quartet& q) { return !displays_quartet(tree, q); });
  return pick(rng, std::move(pool), count);
}

std::vector<Triplet> random_displayed_triplets(std::mt19937_64& rng, const RootedTree& tree, std::size_t count) {
  auto pool = all_triplets(tree.labels());
  std::erase_if(pool, [&](const Triplet& t) { return !displays_triplet(tree, t); });
  return pick(rng, std::move(pool), count);
}

}  // namespace phylocompat
