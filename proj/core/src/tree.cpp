#include "phylocompat/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phylocompat {

namespace detail {

TreeCore::TreeCore(std::vector<std::vector<Vertex>> adjacency, std::vector<std::optional<Label>> labels,
                   Vertex anchor)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)), anchor_(anchor) {
  const std::size_t n = adjacency_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (labels_[v]) leaf_index_.emplace_back(*labels_[v], v);
  }
  std::sort(leaf_index_.begin(), leaf_index_.end());
  label_set_.reserve(leaf_index_.size());
  for (const auto& [label, v] : leaf_index_) label_set_.push_back(label);

  parent_.assign(n, anchor_);
  children_.assign(n, {});
  depth_.assign(n, 0);
  preorder_.reserve(n);
  std::vector<Vertex> stack{anchor_};
  std::vector<char> seen(n, 0);
  seen[anchor_] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    // Push in reverse so children are visited in adjacency order.
    for (auto it = adjacency_[v].rbegin(); it != adjacency_[v].rend(); ++it) {
      if (seen[*it]) continue;
      seen[*it] = 1;
      parent_[*it] = v;
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  for (Vertex v : preorder_) {
    if (v != anchor_) children_[parent_[v]].push_back(v);
  }
}

std::optional<Vertex> TreeCore::find_leaf(Label label) const {
  auto it = std::lower_bound(leaf_index_.begin(), leaf_index_.end(), std::make_pair(label, Vertex{0}));
  if (it == leaf_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

Vertex TreeCore::leaf(Label label) const {
  if (auto v = find_leaf(label)) return *v;
  throw std::invalid_argument("label " + std::to_string(index_of(label)) + " is not a leaf of this tree");
}

std::vector<std::pair<Vertex, Vertex>> TreeCore::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(vertex_count() > 0 ? vertex_count() - 1 : 0);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    for (Vertex w : adjacency_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Vertex> TreeCore::parent(Vertex v) const {
  if (v == anchor_) return std::nullopt;
  return parent_.at(v);
}

Vertex TreeCore::lca(Vertex a, Vertex b) const {
  while (depth_.at(a) > depth_.at(b)) a = parent_[a];
  while (depth_.at(b) > depth_.at(a)) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

}  // namespace detail

Vertex TreeBuilder::add_vertex() {
  adjacency_.emplace_back();
  labels_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

Vertex TreeBuilder::add_leaf(Label label) {
  const Vertex v = add_vertex();
  labels_[v] = label;
  return v;
}

void TreeBuilder::add_edge(Vertex a, Vertex b) {
  if (a >= adjacency_.size() || b >= adjacency_.size()) throw std::out_of_range("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop in tree");
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

TreeBuilder::Compact TreeBuilder::normalize(std::optional<Vertex> root) const {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw std::invalid_argument("empty tree");

  std::size_t degree_sum = 0;
  for (const auto& nbrs : adjacency_) degree_sum += nbrs.size();
  if (degree_sum != 2 * (n - 1)) throw std::invalid_argument("edge count does not match a tree");

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("tree is not connected");

  std::vector<Label> all_labels;
  for (const auto& l : labels_) {
    if (l) all_labels.push_back(*l);
  }
  std::sort(all_labels.begin(), all_labels.end());
  if (std::adjacent_find(all_labels.begin(), all_labels.end()) != all_labels.end()) {
    throw std::invalid_argument("duplicate leaf label");
  }

  auto adj = adjacency_;
  std::vector<char> alive(n, 1);
  auto unlink = [&](Vertex v, Vertex w) {
    auto& list = adj[v];
    list.erase(std::find(list.begin(), list.end(), w));
  };

  if (root) {
    if (*root >= n) throw std::out_of_range("root out of range");
    // An unlabelled root with one child contributes nothing.
    while (!labels_[*root] && adj[*root].size() == 1) {
      const Vertex child = adj[*root].front();
      unlink(child, *root);
      adj[*root].clear();
      alive[*root] = 0;
      root = child;
    }
    if (labels_[*root] && !adj[*root].empty()) {
      throw std::invalid_argument("a labelled root is only allowed in a single-leaf tree");
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (labels_[v]) {
      if (adj[v].size() > 1) throw std::invalid_argument("labelled vertex is not a leaf");
      continue;
    }
    if (root && v == *root) {
      if (adj[v].empty()) throw std::invalid_argument("tree has no leaves");
      continue;
    }
    if (adj[v].size() <= 1) throw std::invalid_argument("unlabelled vertex of degree one");
    if (adj[v].size() == 2) {
      const Vertex x = adj[v][0];
      const Vertex y = adj[v][1];
      unlink(x, v);
      unlink(y, v);
      adj[x].push_back(y);
      adj[y].push_back(x);
      adj[v].clear();
      alive[v] = 0;
    }
  }

  std::vector<Vertex> renumber(n, 0);
  Compact out;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    renumber[v] = static_cast<Vertex>(out.labels.size());
    out.labels.push_back(labels_[v]);
  }
  out.adjacency.resize(out.labels.size());
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    auto& list = out.adjacency[renumber[v]];
    for (Vertex w : adj[v]) list.push_back(renumber[w]);
    std::sort(list.begin(), list.end());
  }
  out.anchor = root ? renumber[*root] : 0;
  return out;
}

UnrootedTree TreeBuilder::build_unrooted() const {
  Compact c = normalize(std::nullopt);
  std::size_t leaves = 0;
  for (const auto& l : c.labels) leaves += l.has_value();
  if (leaves < 2) throw std::invalid_argument("unrooted tree needs at least two leaves");
  return UnrootedTree(std::move(c.adjacency), std::move(c.labels), c.anchor);
}

RootedTree TreeBuilder::build_rooted(Vertex root) const {
  Compact c = normalize(root);
  return RootedTree(std::move(c.adjacency), std::move(c.labels), c.anchor);
}

}  // namespace phylocompat
