#pragma once

#include <vector>

#include "phylocompat/tree.hpp"

namespace phylocompat::detail {

// One centroid, or two adjacent ones. Sizes count every vertex, leaves included.
inline std::vector<Vertex> centroids(const TreeCore& tree) {
  const std::size_t n = tree.vertex_count();
  std::vector<std::size_t> size(n, 1);
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (auto p = tree.parent(*it)) size[*p] += size[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t worst = n - size[v];
    for (Vertex c : tree.children(v)) worst = std::max(worst, size[c]);
    if (2 * worst <= n) out.push_back(v);
  }
  return out;
}

}  // namespace phylocompat::detail
