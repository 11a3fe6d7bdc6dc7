#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "phylocompat/labels.hpp"
#include "phylocompat/tree.hpp"

namespace phylocompat {

// Binary trees are generated by stepwise leaf insertion: the first three labels form a star
// and label k (0-based, k >= 3) is inserted into one of the 2k-3 existing edges. The choice for
// the earliest inserted label is the most significant digit of a tree's index, so ascending
// indices and the depth-first search below visit trees in the same order.
//
// Rooted trees on n labels are the unrooted trees on n+1 leaves where an extra root marker is
// the first leaf; the marker's neighbour becomes the root.

/// (2n-5)!! for n >= 3 (one tree for n = 3). Throws std::overflow_error past 64 bits.
std::uint64_t unrooted_binary_count(std::size_t n);
/// (2n-3)!! for n >= 2.
std::uint64_t rooted_binary_count(std::size_t n);

/// The tree with the given index; labels are inserted in span order.
UnrootedTree unrooted_binary_tree(std::span<const Label> labels, std::uint64_t index);
RootedTree rooted_binary_tree(std::span<const Label> labels, std::uint64_t index);

/// Single-pass stream over an index range [first, last). Independent ranges may be
/// consumed concurrently by separate streams.
class UnrootedBinaryTrees {
 public:
  explicit UnrootedBinaryTrees(LabelSet labels, std::uint64_t first = 0,
                               std::optional<std::uint64_t> last = std::nullopt);
  std::optional<UnrootedTree> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  LabelSet labels_;
  std::uint64_t total_;
  std::uint64_t cursor_;
  std::uint64_t last_;
};

class RootedBinaryTrees {
 public:
  explicit RootedBinaryTrees(LabelSet labels, std::uint64_t first = 0,
                             std::optional<std::uint64_t> last = std::nullopt);
  std::optional<RootedTree> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  LabelSet labels_;
  std::uint64_t total_;
  std::uint64_t cursor_;
  std::uint64_t last_;
};

/// Called on each partial tree once `placed` labels (a prefix of the label span) are in it.
/// Returning false discards every completion of that partial tree.
using UnrootedFilter = std::function<bool(const UnrootedTree& partial, std::size_t placed)>;
using RootedFilter = std::function<bool(const RootedTree& partial, std::size_t placed)>;

/// Depth-first search over leaf insertions. Returns the lowest-index complete tree accepted at
/// every level, or nothing. The filter sees partial trees from three placed labels
/// (unrooted) or two (rooted) up to the full label set.
std::optional<UnrootedTree> search_unrooted_binary(std::span<const Label> labels, const UnrootedFilter& accept);
std::optional<RootedTree> search_rooted_binary(std::span<const Label> labels, const RootedFilter& accept);

}  // namespace phylocompat
