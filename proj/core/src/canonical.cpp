#include "phylocompat/canonical.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "centroid.hpp"

namespace phylocompat {

namespace {

std::string encode_sorted(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ")";
}

std::string encode(const detail::TreeCore& tree, Vertex v, std::optional<Vertex> from) {
  if (auto label = tree.label(v)) return std::to_string(index_of(*label));
  std::vector<std::string> parts;
  for (Vertex w : tree.neighbors(v)) {
    if (from && w == *from) continue;
    parts.push_back(encode(tree, w, v));
  }
  return encode_sorted(std::move(parts));
}

}  // namespace

std::string canonical_form(const UnrootedTree& tree) {
  const auto centre = detail::centroids(tree);
  if (centre.size() == 1) return "U" + encode(tree, centre[0], std::nullopt);
  // Two centroids: root at the midpoint of the edge joining them.
  return "U" + encode_sorted({encode(tree, centre[0], centre[1]), encode(tree, centre[1], centre[0])});
}

std::string canonical_form(const RootedTree& tree) { return "R" + encode(tree, tree.root(), std::nullopt); }

}  // namespace phylocompat
