#include "phylocompat/triplet_compat.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "minimality.hpp"
#include "phylocompat/enumerate.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/tree_ops.hpp"

namespace phylocompat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t position(std::span<const Label> sorted, Label l) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin());
}

bool member(std::span<const Label> sorted, Label l) { return std::binary_search(sorted.begin(), sorted.end(), l); }

bool inside(const Triplet& t, std::span<const Label> sorted) {
  return member(sorted, t.cherry()[0]) && member(sorted, t.cherry()[1]) && member(sorted, t.outgroup());
}

std::vector<Triplet> within(std::span<const Triplet> triplets, std::span<const Label> sorted) {
  std::vector<Triplet> out;
  for (const auto& t : triplets) {
    if (inside(t, sorted)) out.push_back(t);
  }
  return out;
}

std::vector<LabelSet> components_of(std::span<const Label> vertices,
                                    std::span<const std::pair<Label, Label>> edges) {
  UnionFind uf(vertices.size());
  for (const auto& [a, b] : edges) uf.join(position(vertices, a), position(vertices, b));
  std::map<std::size_t, LabelSet> by_root;
  for (std::size_t i = 0; i < vertices.size(); ++i) by_root[uf.find(i)].push_back(vertices[i]);
  std::vector<LabelSet> out;
  for (auto& [root, part] : by_root) out.push_back(std::move(part));
  std::sort(out.begin(), out.end(), [](const LabelSet& x, const LabelSet& y) { return x.front() < y.front(); });
  return out;
}

void check_input(std::span<const Triplet> triplets) {
  if (triplets.empty()) throw std::invalid_argument("empty triplet set");
  require_distinct(triplets);
}

// Returns the subtree root, or nothing after storing a certificate.
std::optional<Vertex> build_rec(std::span<const Triplet> triplets, const LabelSet& labels, TreeBuilder& b,
                                std::vector<Triplet>& certificate) {
  if (labels.size() == 1) return b.add_leaf(labels.front());
  const Vertex node = b.add_vertex();
  if (labels.size() == 2) {
    b.add_edge(node, b.add_leaf(labels[0]));
    b.add_edge(node, b.add_leaf(labels[1]));
    return node;
  }
  const auto local = within(triplets, labels);
  const auto parts = rs_graph(local, labels).components();
  if (parts.size() == 1) {
    certificate = local;
    return std::nullopt;
  }
  for (const auto& part : parts) {
    auto child = build_rec(local, part, b, certificate);
    if (!child) return std::nullopt;
    b.add_edge(node, *child);
  }
  return node;
}

}  // namespace

std::vector<LabelSet> RSGraph::components() const { return components_of(vertices, edges); }

RSGraph rs_graph(std::span<const Triplet> triplets, std::span<const Label> subset) {
  RSGraph g;
  g.vertices = make_label_set(std::vector<Label>(subset.begin(), subset.end()));
  for (const auto& t : triplets) {
    if (inside(t, g.vertices)) g.edges.emplace_back(t.cherry()[0], t.cherry()[1]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

TripletReport build_compat(std::span<const Triplet> triplets) {
  check_input(triplets);
  TreeBuilder b;
  std::vector<Triplet> certificate;
  TripletReport report;
  auto root = build_rec(triplets, label_set(triplets), b, certificate);
  if (root) {
    report.verdict = Verdict::compatible;
    report.witness = b.build_rooted(*root);
  } else {
    std::sort(certificate.begin(), certificate.end());
    report.certificate = std::move(certificate);
  }
  return report;
}

TripletReport compat_triplets_subset_sweep(std::span<const Triplet> triplets, std::size_t max_labels) {
  check_input(triplets);
  const LabelSet labels = label_set(triplets);
  if (labels.size() > std::min(max_labels, kSubsetSweepHardCap)) {
    throw LimitExceeded("subset sweep is capped at " + std::to_string(std::min(max_labels, kSubsetSweepHardCap)) + " labels, input has " +
                        std::to_string(labels.size()));
  }
  struct Coded {
    std::uint32_t mask;  // bits of all three labels
    std::size_t a, b;    // cherry positions
  };
  std::vector<Coded> coded;
  for (const auto& t : triplets) {
    const auto a = position(labels, t.cherry()[0]);
    const auto b = position(labels, t.cherry()[1]);
    const auto c = position(labels, t.outgroup());
    coded.push_back({(1u << a) | (1u << b) | (1u << c), a, b});
  }
  const std::uint32_t full = (1u << labels.size()) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int size = std::popcount(s);
    if (size < 3) continue;
    UnionFind uf(labels.size());
    int merges = 0;
    for (const auto& t : coded) {
      if ((t.mask & s) == t.mask && uf.find(t.a) != uf.find(t.b)) {
        uf.join(t.a, t.b);
        ++merges;
      }
    }
    if (merges == size - 1) {
      LabelSet subset;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (s & (1u << i)) subset.push_back(labels[i]);
      }
      TripletReport report;
      auto cert = within(triplets, subset);
      std::sort(cert.begin(), cert.end());
      report.certificate = std::move(cert);
      return report;
    }
  }
  TripletReport report;
  report.verdict = Verdict::compatible;
  return report;
}

TripletReport compat_triplets_brute(std::span<const Triplet> triplets, const BruteOptions& options) {
  check_input(triplets);
  const LabelSet labels = label_set(triplets);
  if (labels.size() > options.max_labels) {
    throw LimitExceeded("brute force is capped at " + std::to_string(options.max_labels) + " labels, input has " +
                        std::to_string(labels.size()));
  }
  std::vector<std::vector<Triplet>> due(labels.size() + 1);
  for (const auto& t : triplets) {
    const auto last = std::max({position(labels, t.cherry()[0]), position(labels, t.cherry()[1]),
                                position(labels, t.outgroup())});
    due[last + 1].push_back(t);
  }
  auto tree = search_rooted_binary(labels, [&](const RootedTree& partial, std::size_t placed) {
    return std::all_of(due[placed].begin(), due[placed].end(),
                       [&](const Triplet& t) { return displays_triplet(partial, t); });
  });
  TripletReport report;
  if (tree) {
    report.verdict = Verdict::compatible;
    report.witness = std::move(tree);
  } else {
    report.certificate.emplace(triplets.begin(), triplets.end());
  }
  return report;
}

TripletReport compat_triplets(std::span<const Triplet> triplets, TripletMethod method, const BruteOptions& options) {
  switch (method) {
    case TripletMethod::build:
      return build_compat(triplets);
    case TripletMethod::subset_sweep:
      return compat_triplets_subset_sweep(triplets);
    case TripletMethod::brute:
      return compat_triplets_brute(triplets, options);
  }
  throw std::invalid_argument("unknown triplet method");
}

MinimalityReport is_minimally_incompatible_triplets(std::span<const Triplet> triplets, TripletMethod method,
                                                    const BruteOptions& options) {
  check_input(triplets);
  return detail::leave_one_out(triplets, [&](std::span<const Triplet> subset) {
    return !compat_triplets(subset, method, options).compatible();
  });
}

namespace {

// Triplets whose cherry edge survives their own removal: the edge is repeated, or it lies on
// a cycle of [R, L(R)].
std::vector<bool> on_cycle(std::span<const Triplet> triplets) {
  const LabelSet labels = label_set(triplets);
  std::map<std::pair<Label, Label>, int> multiplicity;
  for (const auto& t : triplets) ++multiplicity[{t.cherry()[0], t.cherry()[1]}];
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& [e, n] : multiplicity) edges.push_back(e);

  std::vector<bool> out;
  for (const auto& t : triplets) {
    const std::pair<Label, Label> e{t.cherry()[0], t.cherry()[1]};
    if (multiplicity[e] > 1) {
      out.push_back(true);
      continue;
    }
    UnionFind uf(labels.size());
    for (const auto& f : edges) {
      if (f != e) uf.join(position(labels, f.first), position(labels, f.second));
    }
    out.push_back(uf.find(position(labels, e.first)) == uf.find(position(labels, e.second)));
  }
  return out;
}

}  // namespace

std::vector<Triplet> extract_incompatible_subset(std::span<const Triplet> triplets) {
  check_input(triplets);
  if (build_compat(triplets).compatible()) throw std::invalid_argument("triplet set is compatible");
  std::vector<Triplet> current(triplets.begin(), triplets.end());
  std::sort(current.begin(), current.end());

  for (bool dropped = true; dropped && current.size() > 1;) {
    dropped = false;
    const auto preferred = on_cycle(current);
    std::vector<std::size_t> order(current.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return preferred[i]; });
    for (std::size_t i : order) {
      std::vector<Triplet> rest = current;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (!build_compat(rest).compatible()) {
        current = std::move(rest);
        dropped = true;
        break;
      }
    }
  }
  return current;
}

std::vector<Triplet> triplets_of_quartets(std::span<const Quartet> quartets, Label ell) {
  std::vector<Triplet> out;
  out.reserve(quartets.size());
  for (const auto& q : quartets) {
    const auto& p1 = q.pair1();
    const auto& p2 = q.pair2();
    if (p1[0] == ell || p1[1] == ell) {
      out.emplace_back(p2[0], p2[1], p1[0] == ell ? p1[1] : p1[0]);
    } else if (p2[0] == ell || p2[1] == ell) {
      out.emplace_back(p1[0], p1[1], p2[0] == ell ? p2[1] : p2[0]);
    } else {
      throw std::invalid_argument("quartet does not contain the shared label");
    }
  }
  return out;
}

std::vector<Quartet> quartets_of_triplets(std::span<const Triplet> triplets, Label ell) {
  std::vector<Quartet> out;
  out.reserve(triplets.size());
  for (const auto& t : triplets) {
    if (t.contains(ell)) throw std::invalid_argument("shared label already occurs in a triplet");
    out.emplace_back(t.cherry()[0], t.cherry()[1], t.outgroup(), ell);
  }
  return out;
}

}  // namespace phylocompat
