#include "phylocompat/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace phylocompat {

namespace {

// Leaves are local ids 0..n-1; the internal vertex created when leaf k is inserted is n+k-3,
// with the star centre being n.
class InsertionState {
 public:
  explicit InsertionState(std::size_t n) : n_(static_cast<std::uint32_t>(n)) {
    edges_.reserve(2 * n);
    edges_.emplace_back(n_, 0);
    edges_.emplace_back(n_, 1);
    edges_.emplace_back(n_, 2);
    placed_ = 3;
  }

  std::size_t placed() const noexcept { return placed_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  void insert(std::size_t edge) {
    const std::uint32_t leaf = static_cast<std::uint32_t>(placed_);
    const std::uint32_t mid = n_ + leaf - 2;
    const auto [u, v] = edges_[edge];
    edges_[edge] = {u, mid};
    edges_.emplace_back(mid, v);
    edges_.emplace_back(mid, leaf);
    ++placed_;
  }

  void undo(std::size_t edge) {
    edges_.pop_back();
    const auto [mid, v] = edges_.back();
    edges_.pop_back();
    edges_[edge].second = v;
    --placed_;
  }

  // Builder over the placed leaves; local leaf i maps to builder vertex i, internal vertex
  // n+j maps to builder vertex placed+j.
  TreeBuilder builder(std::span<const std::optional<Label>> leaf_labels) const {
    TreeBuilder b;
    for (std::size_t i = 0; i < placed_; ++i) {
      if (leaf_labels[i]) {
        b.add_leaf(*leaf_labels[i]);
      } else {
        b.add_vertex();
      }
    }
    for (std::size_t j = 0; j + 2 < placed_; ++j) b.add_vertex();
    for (auto [u, v] : edges_) b.add_edge(local(u), local(v));
    return b;
  }

 private:
  Vertex local(std::uint32_t id) const { return id < n_ ? id : static_cast<Vertex>(placed_ + (id - n_)); }

  std::uint32_t n_;
  std::size_t placed_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

std::uint64_t odd_double_factorial(std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t f = 3; f <= k; f += 2) {
    if (out > std::numeric_limits<std::uint64_t>::max() / f) throw std::overflow_error("tree count overflows 64 bits");
    out *= f;
  }
  return out;
}

void require_distinct_labels(std::span<const Label> labels) {
  std::vector<Label> copy(labels.begin(), labels.end());
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
    throw std::invalid_argument("enumeration labels must be distinct");
  }
}

std::vector<std::optional<Label>> unrooted_leaf_labels(std::span<const Label> labels) {
  return {labels.begin(), labels.end()};
}

// Root marker first, then the labels.
std::vector<std::optional<Label>> rooted_leaf_labels(std::span<const Label> labels) {
  std::vector<std::optional<Label>> out{std::nullopt};
  out.insert(out.end(), labels.begin(), labels.end());
  return out;
}

RootedTree materialize_rooted(const InsertionState& state, std::span<const std::optional<Label>> leaf_labels) {
  // Leaf 0 is the root marker. Build with it, then root at its neighbour; the marker is an
  // unlabelled degree-one root, which the builder strips by descending into its only child.
  return state.builder(leaf_labels).build_rooted(0);
}

void apply_index(InsertionState& state, std::size_t n, std::uint64_t index) {
  std::vector<std::uint64_t> digits(n, 0);
  for (std::size_t k = n; k-- > 3;) {
    const std::uint64_t radix = 2 * k - 3;
    digits[k] = index % radix;
    index /= radix;
  }
  for (std::size_t k = 3; k < n; ++k) state.insert(digits[k]);
}

template <class Tree, class Materialize, class Filter>
bool descend(InsertionState& state, std::size_t n, std::size_t offset, const Materialize& materialize,
             const Filter& accept, std::optional<Tree>& found) {
  Tree partial = materialize(state);
  if (!accept(partial, state.placed() - offset)) return false;
  if (state.placed() == n) {
    found.emplace(std::move(partial));
    return true;
  }
  const std::size_t choices = state.edge_count();
  for (std::size_t e = 0; e < choices; ++e) {
    state.insert(e);
    const bool done = descend<Tree>(state, n, offset, materialize, accept, found);
    state.undo(e);
    if (done) return true;
  }
  return false;
}

}  // namespace

std::uint64_t unrooted_binary_count(std::size_t n) {
  if (n < 3) throw std::invalid_argument("unrooted binary trees need at least three labels");
  return odd_double_factorial(2 * n - 5);
}

std::uint64_t rooted_binary_count(std::size_t n) {
  if (n < 2) throw std::invalid_argument("rooted binary trees need at least two labels");
  return odd_double_factorial(2 * n - 3);
}

UnrootedTree unrooted_binary_tree(std::span<const Label> labels, std::uint64_t index) {
  const std::size_t n = labels.size();
  if (index >= unrooted_binary_count(n)) throw std::out_of_range("tree index out of range");
  require_distinct_labels(labels);
  InsertionState state(n);
  apply_index(state, n, index);
  return state.builder(unrooted_leaf_labels(labels)).build_unrooted();
}

RootedTree rooted_binary_tree(std::span<const Label> labels, std::uint64_t index) {
  const std::size_t n = labels.size();
  if (index >= rooted_binary_count(n)) throw std::out_of_range("tree index out of range");
  require_distinct_labels(labels);
  InsertionState state(n + 1);
  apply_index(state, n + 1, index);
  return materialize_rooted(state, rooted_leaf_labels(labels));
}

UnrootedBinaryTrees::UnrootedBinaryTrees(LabelSet labels, std::uint64_t first, std::optional<std::uint64_t> last)
    : labels_(std::move(labels)), total_(unrooted_binary_count(labels_.size())), cursor_(first) {
  last_ = std::min(last.value_or(total_), total_);
}

std::optional<UnrootedTree> UnrootedBinaryTrees::next() {
  if (cursor_ >= last_) return std::nullopt;
  return unrooted_binary_tree(labels_, cursor_++);
}

RootedBinaryTrees::RootedBinaryTrees(LabelSet labels, std::uint64_t first, std::optional<std::uint64_t> last)
    : labels_(std::move(labels)), total_(rooted_binary_count(labels_.size())), cursor_(first) {
  last_ = std::min(last.value_or(total_), total_);
}

std::optional<RootedTree> RootedBinaryTrees::next() {
  if (cursor_ >= last_) return std::nullopt;
  return rooted_binary_tree(labels_, cursor_++);
}

std::optional<UnrootedTree> search_unrooted_binary(std::span<const Label> labels, const UnrootedFilter& accept) {
  const std::size_t n = labels.size();
  if (n < 3) throw std::invalid_argument("unrooted binary trees need at least three labels");
  require_distinct_labels(labels);
  const auto leaf_labels = unrooted_leaf_labels(labels);
  InsertionState state(n);
  std::optional<UnrootedTree> found;
  auto materialize = [&](const InsertionState& s) { return s.builder(leaf_labels).build_unrooted(); };
  descend<UnrootedTree>(state, n, 0, materialize, accept, found);
  return found;
}

std::optional<RootedTree> search_rooted_binary(std::span<const Label> labels, const RootedFilter& accept) {
  const std::size_t n = labels.size();
  if (n < 2) throw std::invalid_argument("rooted binary trees need at least two labels");
  require_distinct_labels(labels);
  const auto leaf_labels = rooted_leaf_labels(labels);
  InsertionState state(n + 1);
  std::optional<RootedTree> found;
  auto materialize = [&](const InsertionState& s) { return materialize_rooted(s, leaf_labels); };
  descend<RootedTree>(state, n + 1, 1, materialize, accept, found);
  return found;
}

}  // namespace phylocompat
