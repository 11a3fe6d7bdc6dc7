#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "phylocompat/labels.hpp"

namespace phylocompat {

using Vertex = std::uint32_t;

namespace detail {

// Shared storage for rooted and unrooted trees: adjacency, leaf labels and a traversal
// anchored at one vertex (the root for rooted trees, vertex 0 otherwise).
class TreeCore {
 public:
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<Label> label(Vertex v) const { return labels_.at(v); }
  bool is_leaf(Vertex v) const { return labels_.at(v).has_value(); }

  const LabelSet& labels() const noexcept { return label_set_; }
  std::size_t leaf_count() const noexcept { return label_set_.size(); }
  bool has_label(Label label) const { return find_leaf(label).has_value(); }
  std::optional<Vertex> find_leaf(Label label) const;
  /// Throws std::invalid_argument for labels the tree does not carry.
  Vertex leaf(Label label) const;

  /// Every edge once, as (smaller, larger) vertex pairs in ascending order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Vertex anchor() const noexcept { return anchor_; }
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }
  /// Vertices in depth-first preorder from the anchor; parents precede children.
  std::span<const Vertex> preorder() const noexcept { return preorder_; }
  /// Lowest common ancestor relative to the anchor.
  Vertex lca(Vertex a, Vertex b) const;

 protected:
  TreeCore(std::vector<std::vector<Vertex>> adjacency, std::vector<std::optional<Label>> labels, Vertex anchor);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::optional<Label>> labels_;
  std::vector<std::pair<Label, Vertex>> leaf_index_;
  LabelSet label_set_;

  Vertex anchor_;
  std::vector<Vertex> parent_;  // parent_[anchor] == anchor
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::uint32_t> depth_;
  std::vector<Vertex> preorder_;
};

}  // namespace detail

/// Leaf-labelled tree without vertices of degree two. The two-leaf single-edge tree is
/// allowed (restriction produces it); single-vertex trees are not.
class UnrootedTree : public detail::TreeCore {
 private:
  friend class TreeBuilder;
  using TreeCore::TreeCore;
};

/// Leaf-labelled tree with a distinguished root; only the root may have degree two.
/// A single leaf on its own is a valid rooted tree.
class RootedTree : public detail::TreeCore {
 public:
  Vertex root() const noexcept { return anchor(); }

 private:
  friend class TreeBuilder;
  using TreeCore::TreeCore;
};

/// Mutable edge list that validates into an immutable tree. Unlabelled vertices of degree two
/// are suppressed on build (except the root of a rooted tree), and an unlabelled root with a
/// single child is replaced by that child.
class TreeBuilder {
 public:
  Vertex add_vertex();
  Vertex add_leaf(Label label);
  void add_edge(Vertex a, Vertex b);
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  /// Throws std::invalid_argument if the edges do not form a tree with labelled leaves.
  UnrootedTree build_unrooted() const;
  RootedTree build_rooted(Vertex root) const;

 private:
  struct Compact {
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<std::optional<Label>> labels;
    Vertex anchor;
  };
  Compact normalize(std::optional<Vertex> root) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::optional<Label>> labels_;
};

}  // namespace phylocompat
