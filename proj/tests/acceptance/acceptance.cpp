// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is 0 only when every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "phylocompat/character_compat.hpp"
#include "phylocompat/constructions.hpp"
#include "phylocompat/formats.hpp"
#include "phylocompat/quartet_compat.hpp"
#include "phylocompat/quartet_graph.hpp"
#include "phylocompat/sampling.hpp"
#include "phylocompat/tree_ops.hpp"
#include "phylocompat/triplet_compat.hpp"

using namespace phylocompat;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kAllowedDisagreements = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::size_t floor_half(std::size_t x) { return x / 2; }
std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

template <class T>
std::vector<T> without(const std::vector<T>& items, std::size_t k) {
  auto rest = items;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  return rest;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The (s,t) pairs with s <= t and s + t <= 8 on which brute force is run.
const std::vector<std::pair<std::size_t, std::size_t>> kBrutePairs = {
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {3, 5}, {4, 4}};

// Witness for Q(s,t) without its k-th quartet (k = 0 is q0, then q_{x,y} with x major).
UnrootedTree witness(Taxa& taxa, std::size_t s, std::size_t t, std::size_t k) {
  if (k == 0) return qst_witness_without_q0(taxa, s, t);
  const std::size_t x = (k - 1) / (t - 1) + 1;
  const std::size_t y = (k - 1) % (t - 1) + 1;
  return qst_witness_without_qxy(taxa, s, t, x, y);
}

// Checks that the witness for each leave-one-out set displays the rest, by both the
// library display test and the four-point oracle. Returns the number of failures.
std::size_t witness_failures(std::size_t s, std::size_t t) {
  Taxa taxa;
  const auto q = gen_qst(taxa, s, t);
  std::size_t failures = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto tree = witness(taxa, s, t, k);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (i == k) continue;
      if (!displays_quartet(tree, q[i]) || !oracle::four_point(tree, q[i])) ++failures;
    }
  }
  return failures;
}

Outcome qst_cardinality() {
  std::size_t bad = 0;
  for (std::size_t s = 2; s <= 8; ++s) {
    for (std::size_t t = 2; t <= 8; ++t) {
      Taxa taxa;
      if (gen_qst(taxa, s, t).size() != (s - 1) * (t - 1) + 1) ++bad;
    }
  }
  return {bad == 0, "s,t in [2,8]: " + std::to_string(49 - bad) + "/49 sizes equal (s-1)(t-1)+1"};
}

Outcome qst_incompatible() {
  std::size_t bad = 0;
  for (auto [s, t] : kBrutePairs) {
    Taxa taxa;
    if (compat_quartets_brute(gen_qst(taxa, s, t)).compatible()) ++bad;
  }
  return {bad == 0, std::to_string(kBrutePairs.size() - bad) + "/" + std::to_string(kBrutePairs.size()) +
                        " families incompatible by exhaustive search"};
}

Outcome qst_witnesses() {
  std::size_t failures = 0;
  std::size_t families = 0;
  for (auto [s, t] : kBrutePairs) {
    failures += witness_failures(s, t) + witness_failures(t, s);
    families += 2;
  }
  for (std::size_t s = 2; s <= 6; ++s) {
    for (std::size_t t = 2; t <= 6; ++t, ++families) failures += witness_failures(s, t);
  }
  return {failures == 0, std::to_string(families) + " families, undisplayed quartets " + std::to_string(failures) +
                             " (tolerance 0)"};
}

Outcome quartet_lower_bound() {
  std::size_t bad = 0;
  std::string sizes;
  for (std::size_t n = 4; n <= 8; ++n) {
    Taxa taxa;
    const auto q = gen_minimal_incompatible_quartets(taxa, n);
    const std::size_t want = floor_half(n - 2) * ceil_half(n - 2) + 1;
    bool ok = q.size() == want && label_set(q).size() == n;
    ok = ok && !compat_quartets_brute(q).compatible();
    for (std::size_t k = 0; k < q.size() && ok; ++k) ok = compat_quartets_brute(without(q, k)).compatible();
    ok = ok && is_minimally_incompatible_quartets(q).minimal();
    if (!ok) ++bad;
    sizes += (sizes.empty() ? "" : ",") + std::to_string(q.size());
  }
  return {bad == 0, "n in [4,8] sizes " + sizes + ", minimal " + std::to_string(5 - bad) + "/5"};
}

std::vector<Quartet> random_quartet_set(std::mt19937_64& rng, Taxa& taxa) {
  std::uniform_int_distribution<std::size_t> label_count(4, 6);
  const std::size_t n = label_count(rng);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(taxa.intern("x" + std::to_string(i + 1)));
  const std::size_t choose4 = n * (n - 1) * (n - 2) * (n - 3) / 24;
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::uniform_int_distribution<std::size_t> count(1, choose4);
    return random_displayed_quartets(rng, random_unrooted_binary(rng, labels), count(rng));
  }
  std::uniform_int_distribution<std::size_t> count(2, std::min<std::size_t>(6, 3 * choose4));
  return random_quartets(rng, labels, count(rng));
}

Outcome quartet_character_agreement() {
  std::mt19937_64 rng(kSeed);
  std::size_t disagreements = 0;
  std::size_t instances = 0;
  std::size_t compatible = 0;
  auto check = [&](const std::vector<Quartet>& q) {
    ++instances;
    const auto quartets = compat_quartets_brute(q);
    const auto chars = compat_characters_brute(c_of_q(q));
    if (quartets.verdict != chars.verdict) ++disagreements;
    if (quartets.compatible()) {
      ++compatible;
      for (const auto& x : q) disagreements += oracle::four_point(*quartets.witness, x) ? 0 : 1;
      for (const auto& c : c_of_q(q)) disagreements += oracle::convex(*chars.witness, c) ? 0 : 1;
    }
  };
  for (std::size_t i = 0; i < 200; ++i) {
    Taxa taxa;
    check(random_quartet_set(rng, taxa));
  }
  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t t = 2; s + t <= 7; ++t) {
      Taxa taxa;
      check(gen_qst(taxa, s, t));
    }
  }
  return {disagreements <= kAllowedDisagreements,
          std::to_string(instances) + " instances (" + std::to_string(compatible) + " compatible), disagreements " +
              std::to_string(disagreements) + " (tolerance 0)"};
}

Outcome character_lower_bound() {
  std::size_t bad = 0;
  std::string sizes;
  for (std::size_t r = 2; r <= 5; ++r) {
    Taxa taxa;
    const auto c = gen_minimal_incompatible_characters(taxa, r);
    bool ok = c.size() == floor_half(r) * ceil_half(r) + 1 && max_states(c) <= r;
    ok = ok && !compat_characters_brute(c).compatible();
    for (std::size_t k = 0; k < c.size() && ok; ++k) {
      const auto rest = compat_characters_brute(without(c, k));
      ok = rest.compatible();
      for (const auto& x : without(c, k)) ok = ok && oracle::convex(*rest.witness, x);
    }
    if (r == 4) ok = ok && c.size() == 5;
    if (!ok) ++bad;
    sizes += (sizes.empty() ? "" : ",") + std::to_string(c.size());
  }
  return {bad == 0, "r in [2,5] sizes " + sizes + ", minimal " + std::to_string(4 - bad) + "/4"};
}

// The three-quartet example and the sequence {a,b}, {e,f}, then the two new classes.
bool reference_sequence() {
  Taxa taxa;
  const auto q = parse_quartets("a b | c e\nc d | b f\na d | e f\n", taxa);
  const QuartetGraph g(q);
  const ClassId a = *g.class_of(taxa.at("a")), b = *g.class_of(taxa.at("b"));
  const ClassId e = *g.class_of(taxa.at("e")), f = *g.class_of(taxa.at("f"));
  if (!admissible(g, std::vector<ClassId>{a, b})) return false;
  const auto g1 = unify(g, std::vector<ClassId>{a, b});
  const ClassId ab = g.next_class();
  if (!admissible(g1, std::vector<ClassId>{e, f})) return false;
  const auto g2 = unify(g1, std::vector<ClassId>{e, f});
  const ClassId ef = g1.next_class();
  if (!admissible(g2, std::vector<ClassId>{ab, ef})) return false;
  const auto g3 = unify(g2, std::vector<ClassId>{ab, ef});
  const UnificationSequence seq{{{a, b}, ab}, {{e, f}, ef}, {{ab, ef}, g2.next_class()}};
  return g3.edgeless() && replay(g, seq).edgeless();
}

Outcome unification_agreement() {
  std::mt19937_64 rng(kSeed + 1);
  std::size_t disagreements = 0;
  std::size_t instances = 0;
  auto check = [&](const std::vector<Quartet>& q) {
    ++instances;
    const QuartetGraph g(q);
    const auto seq = find_complete_unification(g);
    const bool brute = compat_quartets_brute(q).compatible();
    if (seq.has_value() != brute) ++disagreements;
    if (seq && !replay(g, *seq).edgeless()) ++disagreements;
  };
  for (std::size_t i = 0; i < 200; ++i) {
    Taxa taxa;
    check(random_quartet_set(rng, taxa));
  }
  Taxa example;
  check(parse_quartets("a b | c e\nc d | b f\na d | e f\n", example));
  Taxa q22;
  check(gen_qst(q22, 2, 2));
  const bool sequence = reference_sequence();
  return {disagreements <= kAllowedDisagreements && sequence,
          std::to_string(instances) + " instances, disagreements " + std::to_string(disagreements) +
              " (tolerance 0), reference sequence " + (sequence ? "replays" : "fails")};
}

std::vector<Triplet> random_triplet_set(std::mt19937_64& rng, Taxa& taxa, std::size_t min_labels,
                                        std::size_t max_labels, std::size_t max_count) {
  std::uniform_int_distribution<std::size_t> label_count(min_labels, max_labels);
  const std::size_t n = label_count(rng);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(taxa.intern("x" + std::to_string(i + 1)));
  const std::size_t pool = n * (n - 1) * (n - 2) / 2;
  std::uniform_int_distribution<std::size_t> count(1, std::min(max_count, pool));
  return random_triplets(rng, labels, count(rng));
}

Outcome triplet_agreement() {
  std::mt19937_64 rng(kSeed + 2);
  std::size_t disagreements = 0;
  std::size_t compatible = 0;
  for (std::size_t i = 0; i < 300; ++i) {
    Taxa taxa;
    const auto r = random_triplet_set(rng, taxa, 3, 6, 8);
    const auto build = build_compat(r);
    const auto sweep = compat_triplets_subset_sweep(r);
    const auto brute = compat_triplets_brute(r);
    if (build.verdict != sweep.verdict || build.verdict != brute.verdict) ++disagreements;
    if (build.compatible()) {
      ++compatible;
      for (const auto& x : r) disagreements += oracle::rooted_cherry(*build.witness, x) ? 0 : 1;
    }
  }
  return {disagreements <= kAllowedDisagreements, "300 instances (" + std::to_string(compatible) +
                                                      " compatible), disagreements " +
                                                      std::to_string(disagreements) + " (tolerance 0)"};
}

Outcome tight_triplets() {
  std::size_t bad = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    Taxa taxa;
    const auto r = gen_tight_triplets(taxa, n);
    bool ok = r.size() == n - 1 && label_set(r).size() == n && !build_compat(r).compatible();
    for (std::size_t k = 0; k < r.size() && ok; ++k) ok = build_compat(without(r, k)).compatible();
    ok = ok && !compat_triplets_subset_sweep(r).compatible();
    if (!ok) ++bad;
  }
  return {bad == 0, "n in [3,12]: " + std::to_string(10 - bad) + "/10 sets with n-1 triplets, minimal"};
}

// [R, L(R)] connectivity computed from scratch: join a and b for every ab|c.
bool cherry_graph_connected(const std::vector<Triplet>& r) {
  const auto labels = label_set(r);
  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto index = [&](Label l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  std::size_t parts = labels.size();
  for (const auto& t : r) {
    const std::size_t x = root(index(t.cherry()[0])), y = root(index(t.cherry()[1]));
    if (x != y) parent[x] = y, --parts;
  }
  return parts == 1;
}

Outcome extraction() {
  std::mt19937_64 rng(kSeed + 3);
  std::size_t bad = 0;
  std::size_t instances = 0;
  while (instances < 100) {
    Taxa taxa;
    auto r = random_triplet_set(rng, taxa, 4, 8, 14);
    if (r.size() <= label_set(r).size() - 1 || build_compat(r).compatible()) continue;
    ++instances;
    const auto sub = extract_incompatible_subset(r);
    const auto sorted_r = sorted(r);
    bool ok = sub.size() < r.size() && std::includes(sorted_r.begin(), sorted_r.end(), sub.begin(), sub.end());
    ok = ok && sub.size() <= label_set(sub).size() - 1;
    ok = ok && !build_compat(sub).compatible() && !compat_triplets_subset_sweep(sub).compatible();
    for (std::size_t k = 0; k < sub.size() && ok; ++k) {
      const auto rest = without(sub, k);
      ok = build_compat(rest).compatible() && compat_triplets_subset_sweep(rest).compatible();
    }
    ok = ok && cherry_graph_connected(sub) && rs_graph(sub, label_set(sub)).connected();
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(instances) + " incompatible sets, bad extractions " + std::to_string(bad) +
                        " (tolerance 0)"};
}

Outcome cyclic_triplets() {
  std::size_t bad = 0;
  for (std::size_t r = 2; r <= 8; ++r) {
    Taxa taxa;
    const auto rr = gen_cyclic_triplets(taxa, r);
    bool ok = rr.size() == r && is_minimally_incompatible_triplets(rr).minimal();
    const Label ell = taxa.intern(kFreshLabelName);
    const auto lift = quartets_of_triplets(rr, ell);
    const bool triplet_compatible = build_compat(rr).compatible();
    const bool unification = find_complete_unification(QuartetGraph(lift)).has_value();
    ok = ok && !unification && unification == triplet_compatible;
    if (label_set(lift).size() <= kDefaultUnrootedCap) ok = ok && !compat_quartets_brute(lift).compatible();
    if (!ok) ++bad;
  }
  return {bad == 0, "r in [2,8]: " + std::to_string(7 - bad) + "/7 minimal with incompatible lift"};
}

Outcome transpose() {
  std::size_t bad = 0;
  for (std::size_t s = 2; s <= 8; ++s) {
    for (std::size_t t = 2; t <= 8; ++t) {
      Taxa taxa;
      const auto q = gen_qst(taxa, s, t);
      if (sorted(relabel(q, qst_transpose_map(taxa, s, t))) != sorted(gen_qst(taxa, t, s))) ++bad;
    }
  }
  return {bad == 0, "s,t in [2,8]: " + std::to_string(49 - bad) + "/49 exact set equalities"};
}

struct Criterion {
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"qst cardinality", 1, qst_cardinality},
      {"qst incompatible (exhaustive)", 120, qst_incompatible},
      {"leave-one-out witnesses", 10, qst_witnesses},
      {"quartet lower bound family", 120, quartet_lower_bound},
      {"quartet/character agreement", 120, quartet_character_agreement},
      {"character lower bound family", 300, character_lower_bound},
      {"unification/brute agreement", 120, unification_agreement},
      {"triplet method agreement", 120, triplet_agreement},
      {"tight triplet family", 10, tight_triplets},
      {"incompatible subset extraction", 120, extraction},
      {"cyclic triplets and lift", 10, cyclic_triplets},
      {"label transpose", 1, transpose},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && seconds <= c.budget_seconds;
    failed += pass ? 0 : 1;
    std::printf("[%s] %02d %s: %s; %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                seconds, c.budget_seconds);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
