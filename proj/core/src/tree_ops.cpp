#include "phylocompat/tree_ops.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace phylocompat {

namespace {

// Per-vertex count of marked leaves in the anchored subtree.
std::vector<std::uint32_t> marked_below(const detail::TreeCore& tree, std::span<const Vertex> marked) {
  std::vector<std::uint32_t> count(tree.vertex_count(), 0);
  for (Vertex v : marked) count[v] = 1;
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (auto p = tree.parent(*it)) count[*p] += count[*it];
  }
  return count;
}

std::vector<Vertex> leaves_for(const detail::TreeCore& tree, std::span<const Label> labels) {
  std::vector<Vertex> out;
  out.reserve(labels.size());
  for (Label l : labels) out.push_back(tree.leaf(l));
  return out;
}

// Vertices of the minimal subtree spanning `terminals`, plus its top vertex (the vertex
// closest to the anchor).
struct Spanning {
  std::vector<char> member;
  Vertex top = 0;
};

Spanning spanning_subtree(const detail::TreeCore& tree, std::span<const Vertex> terminals) {
  const auto count = marked_below(tree, terminals);
  const std::uint32_t total = static_cast<std::uint32_t>(terminals.size());
  Spanning out;
  out.member.assign(tree.vertex_count(), 0);
  std::size_t top_depth = 0;
  bool have_top = false;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (count[v] == 0) continue;
    if (count[v] < total) {
      out.member[v] = 1;
    } else if (!have_top || tree.depth(v) > top_depth) {
      out.top = v;
      top_depth = tree.depth(v);
      have_top = true;
    }
  }
  out.member[out.top] = 1;
  return out;
}

template <class Tree>
TreeBuilder induced_builder(const Tree& tree, const Spanning& span, Vertex& new_top) {
  TreeBuilder builder;
  std::vector<Vertex> mapped(tree.vertex_count(), 0);
  for (Vertex v : tree.preorder()) {
    if (!span.member[v]) continue;
    if (auto label = tree.label(v)) {
      mapped[v] = builder.add_leaf(*label);
    } else {
      mapped[v] = builder.add_vertex();
    }
    if (v != span.top) builder.add_edge(mapped[*tree.parent(v)], mapped[v]);
  }
  new_top = mapped[span.top];
  return builder;
}

LabelSet checked_label_set(std::span<const Label> labels, std::size_t minimum) {
  LabelSet set = make_label_set({labels.begin(), labels.end()});
  if (set.size() != labels.size()) throw std::invalid_argument("restriction label set has duplicates");
  if (set.size() < minimum) {
    throw std::invalid_argument("restriction needs at least " + std::to_string(minimum) + " labels");
  }
  return set;
}

// x lies on the u-v path iff x is an ancestor of u or of v and a descendant of lca(u, v).
bool on_path(const detail::TreeCore& tree, Vertex x, Vertex u, Vertex v, Vertex uv_lca) {
  if (tree.lca(x, uv_lca) != uv_lca) return false;
  return tree.lca(x, u) == x || tree.lca(x, v) == x;
}

}  // namespace

UnrootedTree unroot(const RootedTree& tree) {
  if (tree.leaf_count() < 3) throw std::invalid_argument("unroot needs at least three leaves");
  TreeBuilder builder;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (auto label = tree.label(v)) {
      builder.add_leaf(*label);
    } else {
      builder.add_vertex();
    }
  }
  for (auto [a, b] : tree.edges()) builder.add_edge(a, b);
  return builder.build_unrooted();
}

UnrootedTree restrict_to(const UnrootedTree& tree, std::span<const Label> labels) {
  const LabelSet set = checked_label_set(labels, 2);
  const auto terminals = leaves_for(tree, set);
  Vertex top = 0;
  return induced_builder(tree, spanning_subtree(tree, terminals), top).build_unrooted();
}

RootedTree restrict_to(const RootedTree& tree, std::span<const Label> labels) {
  const LabelSet set = checked_label_set(labels, 1);
  const auto terminals = leaves_for(tree, set);
  Vertex top = 0;
  auto builder = induced_builder(tree, spanning_subtree(tree, terminals), top);
  return builder.build_rooted(top);
}

bool displays_quartet(const UnrootedTree& tree, const Quartet& quartet) {
  const Vertex a = tree.leaf(quartet.pair1()[0]);
  const Vertex b = tree.leaf(quartet.pair1()[1]);
  const Vertex c = tree.leaf(quartet.pair2()[0]);
  const Vertex d = tree.leaf(quartet.pair2()[1]);
  const Vertex ab = tree.lca(a, b);
  const Vertex cd = tree.lca(c, d);
  // Two tree paths meet iff the top vertex of one lies on the other.
  return !on_path(tree, ab, c, d, cd) && !on_path(tree, cd, a, b, ab);
}

bool displays_triplet(const RootedTree& tree, const Triplet& triplet) {
  const Vertex a = tree.leaf(triplet.cherry()[0]);
  const Vertex b = tree.leaf(triplet.cherry()[1]);
  const Vertex c = tree.leaf(triplet.outgroup());
  const Vertex cherry_top = tree.lca(a, b);
  return tree.lca(cherry_top, c) != cherry_top;
}

bool is_convex(const UnrootedTree& tree, const Character& character) {
  std::vector<std::uint32_t> owner(tree.vertex_count(), 0);
  std::uint32_t state = 0;
  for (const auto& part : character.parts()) {
    ++state;
    const auto terminals = leaves_for(tree, part);
    if (terminals.size() < 2) continue;  // a lone leaf is never inside another state's subtree
    const auto span = spanning_subtree(tree, terminals);
    for (Vertex v = 0; v < tree.vertex_count(); ++v) {
      if (!span.member[v]) continue;
      if (owner[v] != 0) return false;
      owner[v] = state;
    }
  }
  return true;
}

}  // namespace phylocompat
