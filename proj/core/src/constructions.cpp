#include "phylocompat/constructions.hpp"

#include <stdexcept>
#include <string>

#include "phylocompat/character_compat.hpp"
#include "phylocompat/triplet_compat.hpp"

namespace phylocompat {

namespace {

void require_at_least(std::size_t value, std::size_t bound, const char* what) {
  if (value < bound) throw std::invalid_argument(std::string(what) + " must be at least " + std::to_string(bound));
}

Label named(Taxa& taxa, char prefix, std::size_t index) { return taxa.intern(prefix + std::to_string(index)); }

}  // namespace

StLabels qst_labels(Taxa& taxa, std::size_t s, std::size_t t) {
  require_at_least(s, 2, "s");
  require_at_least(t, 2, "t");
  StLabels out{s, t, {}, {}};
  for (std::size_t i = 1; i <= s; ++i) out.a.push_back(named(taxa, 'a', i));
  for (std::size_t j = 1; j <= t; ++j) out.b.push_back(named(taxa, 'b', j));
  return out;
}

Quartet qst_q0(const StLabels& l) { return Quartet(l.a.front(), l.b.front(), l.a.back(), l.b.back()); }

Quartet qst_qxy(const StLabels& l, std::size_t x, std::size_t y) {
  if (x < 1 || x >= l.s || y < 1 || y >= l.t) throw std::invalid_argument("quartet index out of range");
  return Quartet(l.a[x - 1], l.a[x], l.b[y - 1], l.b[y]);
}

std::vector<Quartet> gen_qst(Taxa& taxa, std::size_t s, std::size_t t) {
  const StLabels l = qst_labels(taxa, s, t);
  std::vector<Quartet> out{qst_q0(l)};
  for (std::size_t i = 1; i < s; ++i) {
    for (std::size_t j = 1; j < t; ++j) out.push_back(qst_qxy(l, i, j));
  }
  return out;
}

LabelMap qst_transpose_map(Taxa& taxa, std::size_t s, std::size_t t) {
  const StLabels from = qst_labels(taxa, s, t);
  const StLabels to = qst_labels(taxa, t, s);
  LabelMap map;
  for (std::size_t i = 0; i < s; ++i) map[from.a[i]] = to.b[i];
  for (std::size_t j = 0; j < t; ++j) map[from.b[j]] = to.a[j];
  return map;
}

UnrootedTree qst_witness_without_q0(Taxa& taxa, std::size_t s, std::size_t t) {
  const StLabels l = qst_labels(taxa, s, t);
  TreeBuilder b;
  const Vertex va = b.add_vertex();
  const Vertex vb = b.add_vertex();
  b.add_edge(va, vb);
  for (Label x : l.a) b.add_edge(va, b.add_leaf(x));
  for (Label y : l.b) b.add_edge(vb, b.add_leaf(y));
  return b.build_unrooted();
}

UnrootedTree qst_witness_without_qxy(Taxa& taxa, std::size_t s, std::size_t t, std::size_t x, std::size_t y) {
  const StLabels l = qst_labels(taxa, s, t);
  if (x < 1 || x >= s || y < 1 || y >= t) throw std::invalid_argument("quartet index out of range");
  TreeBuilder b;
  const Vertex a_low = b.add_vertex();
  const Vertex low = b.add_vertex();
  const Vertex high = b.add_vertex();
  const Vertex a_high = b.add_vertex();
  const Vertex b_low = b.add_vertex();
  const Vertex b_high = b.add_vertex();
  b.add_edge(a_low, low);
  b.add_edge(low, high);
  b.add_edge(high, a_high);
  b.add_edge(low, b_low);
  b.add_edge(high, b_high);
  for (std::size_t i = 1; i <= s; ++i) b.add_edge(i <= x ? a_low : a_high, b.add_leaf(l.a[i - 1]));
  for (std::size_t j = 1; j <= t; ++j) b.add_edge(j <= y ? b_low : b_high, b.add_leaf(l.b[j - 1]));
  // A side holding a single leaf leaves a degree-two vertex; the builder suppresses it.
  return b.build_unrooted();
}

std::vector<Quartet> gen_minimal_incompatible_quartets(Taxa& taxa, std::size_t n) {
  require_at_least(n, 4, "n");
  return gen_qst(taxa, n / 2, n - n / 2);
}

std::vector<Character> gen_minimal_incompatible_characters(Taxa& taxa, std::size_t r) {
  require_at_least(r, 2, "r");
  return c_of_q(gen_minimal_incompatible_quartets(taxa, r + 2));
}

std::vector<Triplet> gen_cyclic_triplets(Taxa& taxa, std::size_t r) {
  require_at_least(r, 2, "r");
  const Label a = taxa.intern("a");
  std::vector<Label> bs;
  for (std::size_t i = 1; i <= r; ++i) bs.push_back(named(taxa, 'b', i));
  std::vector<Triplet> out{Triplet(a, bs.back(), bs.front())};
  for (std::size_t i = 0; i + 1 < r; ++i) out.emplace_back(a, bs[i], bs[i + 1]);
  return out;
}

std::vector<Triplet> gen_tight_triplets(Taxa& taxa, std::size_t n, SharedLabel shared) {
  require_at_least(n, 3, "n");
  const auto quartets = gen_qst(taxa, 2, n - 1);
  const Label ell = taxa.at(shared == SharedLabel::a1 ? "a1" : "a2");
  return triplets_of_quartets(quartets, ell);
}

}  // namespace phylocompat
