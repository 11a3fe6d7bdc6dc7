#include "cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "phylocompat/character_compat.hpp"
#include "phylocompat/constructions.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/formats.hpp"
#include "phylocompat/quartet_compat.hpp"
#include "phylocompat/quartet_graph.hpp"
#include "phylocompat/sampling.hpp"
#include "phylocompat/tree_ops.hpp"
#include "phylocompat/triplet_compat.hpp"

namespace phylocompat::cli {

bool VerifyReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; });
}

namespace {

std::size_t bounded(std::optional<std::size_t> value, std::size_t fallback, std::size_t lo, std::size_t cap,
                    const char* flag) {
  const std::size_t v = value.value_or(fallback);
  if (v < lo) throw std::invalid_argument(std::string(flag) + " must be at least " + std::to_string(lo));
  if (v > cap) throw LimitExceeded(std::string(flag) + " is capped at " + std::to_string(cap));
  return v;
}

std::string qst_name(std::size_t s, std::size_t t) {
  return "Q(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

std::size_t floor_half(std::size_t x) { return x / 2; }
std::size_t ceil_half(std::size_t x) { return x - x / 2; }

LabelSet fresh_labels(Taxa& taxa, std::size_t n) {
  LabelSet out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(taxa.intern("x" + std::to_string(i)));
  return out;
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Half of the samples are subsets of one tree's quartets (compatible); the rest are uniform
// draws, which are mostly incompatible.
std::vector<Quartet> sample_quartets(std::mt19937_64& rng, Taxa& taxa, std::size_t max_labels) {
  const auto labels = fresh_labels(taxa, draw(rng, 4, max_labels));
  const std::size_t n = labels.size();
  const std::size_t subsets = n * (n - 1) * (n - 2) * (n - 3) / 24;  // a tree displays one quartet per 4-subset
  const std::size_t count = draw(rng, 1, std::min<std::size_t>(8, 3 * subsets));
  if (draw(rng, 0, 1) == 0) {
    const auto tree = random_unrooted_binary(rng, labels);
    return random_displayed_quartets(rng, tree, std::min(count, subsets));
  }
  return random_quartets(rng, labels, count);
}

std::vector<Triplet> sample_triplets(std::mt19937_64& rng, Taxa& taxa, std::size_t max_labels) {
  const auto labels = fresh_labels(taxa, draw(rng, 3, max_labels));
  const std::size_t triples = labels.size() * (labels.size() - 1) * (labels.size() - 2) / 6;
  const std::size_t count = draw(rng, 1, std::min<std::size_t>(labels.size() + 2, triples));
  if (draw(rng, 0, 1) == 0) {
    const auto tree = random_rooted_binary(rng, labels);
    auto out = random_displayed_triplets(rng, tree, count);
    if (draw(rng, 0, 1) == 0) {
      // One extra uniform triplet, which may or may not break compatibility.
      for (const auto& t : random_triplets(rng, labels, 1)) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
    return out;
  }
  return random_triplets(rng, labels, count);
}

std::string summary(std::span<const Quartet> q, const Taxa& taxa) {
  std::string out;
  for (const auto& x : q) {
    if (!out.empty()) out += "; ";
    out += format_quartet(x, taxa);
  }
  return out;
}

std::string summary(std::span<const Triplet> r, const Taxa& taxa) {
  std::string out;
  for (const auto& x : r) {
    if (!out.empty()) out += "; ";
    out += format_triplet(x, taxa);
  }
  return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// True iff every quartet except `skip` is displayed by `tree`.
bool displays_all_but(const UnrootedTree& tree, std::span<const Quartet> q, std::size_t skip) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i != skip && !displays_quartet(tree, q[i])) return false;
  }
  return true;
}

// The tree from the explicit construction that should display Q(s,t) without its k-th
// quartet (gen_qst order: q0 first, then i-major).
UnrootedTree witness_for(Taxa& taxa, std::size_t s, std::size_t t, std::size_t k) {
  if (k == 0) return qst_witness_without_q0(taxa, s, t);
  const std::size_t x = (k - 1) / (t - 1) + 1;
  const std::size_t y = (k - 1) % (t - 1) + 1;
  return qst_witness_without_qxy(taxa, s, t, x, y);
}

VerifyReport qst_cardinality(const VerifyParams& p) {
  const std::size_t max = bounded(p.max, 8, 2, 64, "--max");
  VerifyReport r{"obs1", {}};
  for (std::size_t s = 2; s <= max; ++s) {
    for (std::size_t t = 2; t <= max; ++t) {
      Taxa taxa;
      const auto q = gen_qst(taxa, s, t);
      const std::size_t want = (s - 1) * (t - 1) + 1;
      r.cases.push_back({qst_name(s, t), q.size() == want && taxa.size() == s + t,
                         "size " + std::to_string(q.size()) + ", expected " + std::to_string(want)});
    }
  }
  return r;
}

VerifyReport quartet_character_agreement(const VerifyParams& p) {
  const std::size_t samples = bounded(p.samples, 200, 0, 100000, "--samples");
  const std::size_t max_labels = bounded(p.max_labels, 6, 4, kDefaultUnrootedCap, "--max-labels");
  VerifyReport r{"lemma1", {}};
  auto check = [&](std::string instance, std::span<const Quartet> q) {
    const auto by_quartets = compat_quartets_brute(q).verdict;
    const auto by_characters = compat_characters_brute(c_of_q(q)).verdict;
    r.cases.push_back({std::move(instance), by_quartets == by_characters,
                       std::string(to_string(by_quartets)) + " / " + std::string(to_string(by_characters))});
  };
  std::mt19937_64 rng(p.seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Taxa taxa;
    const auto q = sample_quartets(rng, taxa, max_labels);
    check("random#" + std::to_string(i + 1) + " [" + summary(q, taxa) + "]", q);
  }
  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t t = 2; s + t <= 7; ++t) {
      Taxa taxa;
      check(qst_name(s, t), gen_qst(taxa, s, t));
    }
  }
  return r;
}

VerifyReport transpose_symmetry(const VerifyParams& p) {
  const std::size_t max = bounded(p.max, 8, 2, 64, "--max");
  VerifyReport r{"lemma2", {}};
  for (std::size_t s = 2; s <= max; ++s) {
    for (std::size_t t = 2; t <= max; ++t) {
      Taxa taxa;
      const auto q = gen_qst(taxa, s, t);
      const auto mapped = sorted(relabel(q, qst_transpose_map(taxa, s, t)));
      const auto target = sorted(gen_qst(taxa, t, s));
      r.cases.push_back({qst_name(s, t) + " -> " + qst_name(t, s), mapped == target,
                         mapped == target ? "sets equal" : "sets differ"});
    }
  }
  return r;
}

VerifyReport qst_incompatible_and_witnesses(const VerifyParams& p) {
  const std::size_t max = bounded(p.max, 6, 2, 24, "--max");
  const std::size_t brute_labels = bounded(p.max_labels, 8, 4, kDefaultUnrootedCap, "--max-labels");
  VerifyReport r{"lemma3-4", {}};
  for (std::size_t s = 2; 2 * s <= brute_labels; ++s) {
    for (std::size_t t = s; s + t <= brute_labels; ++t) {
      Taxa taxa;
      const auto verdict = compat_quartets_brute(gen_qst(taxa, s, t)).verdict;
      r.cases.push_back({qst_name(s, t) + " brute", verdict == Verdict::incompatible, std::string(to_string(verdict))});
    }
  }
  for (std::size_t s = 2; s <= max; ++s) {
    for (std::size_t t = 2; t <= max; ++t) {
      Taxa taxa;
      const auto q = gen_qst(taxa, s, t);
      std::size_t failures = 0;
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (!displays_all_but(witness_for(taxa, s, t, k), q, k)) ++failures;
      }
      r.cases.push_back({qst_name(s, t) + " witnesses", failures == 0,
                         std::to_string(q.size() - failures) + "/" + std::to_string(q.size()) + " leave-one-out sets"});
    }
  }
  return r;
}

// The three-quartet example and its three-step sequence {a,b}, {e,f}, {g,h}.
VerifyCase reference_sequence_case() {
  Taxa taxa;
  const auto q = parse_quartets("a b | c e\nc d | b f\na d | e f\n", taxa);
  const QuartetGraph g(q);
  UnificationSequence seq;
  QuartetGraph cur = g;
  auto step = [&](std::vector<ClassId> unified) {
    seq.push_back({unified, cur.next_class()});
    cur = unify(cur, unified);
    return seq.back().new_class;
  };
  const ClassId gg = step({*g.class_of(taxa.at("a")), *g.class_of(taxa.at("b"))});
  const ClassId hh = step({*g.class_of(taxa.at("e")), *g.class_of(taxa.at("f"))});
  step({gg, hh});
  bool ok = false;
  std::string detail;
  try {
    ok = replay(g, seq).edgeless() && seq.size() == 3;
    detail = ok ? "replayed to an edgeless graph" : "replay left edges";
  } catch (const std::invalid_argument& e) {
    detail = e.what();
  }
  return {"example three-step sequence", ok, detail};
}

VerifyReport unification_agreement(const VerifyParams& p) {
  const std::size_t samples = bounded(p.samples, 200, 0, 100000, "--samples");
  const std::size_t max_labels = bounded(p.max_labels, 6, 4, kDefaultUnrootedCap, "--max-labels");
  VerifyReport r{"thm2-agreement", {}};
  auto check = [&](std::string instance, std::span<const Quartet> q) {
    const auto brute = compat_quartets_brute(q).verdict;
    const auto seq = find_complete_unification(QuartetGraph(q));
    bool ok = seq.has_value() == (brute == Verdict::compatible);
    if (seq) ok = ok && replay(QuartetGraph(q), *seq).edgeless();
    r.cases.push_back({std::move(instance), ok,
                       std::string(to_string(brute)) + ", sequence " + (seq ? "found" : "absent")});
  };
  std::mt19937_64 rng(p.seed + 1);
  for (std::size_t i = 0; i < samples; ++i) {
    Taxa taxa;
    const auto q = sample_quartets(rng, taxa, max_labels);
    check("random#" + std::to_string(i + 1) + " [" + summary(q, taxa) + "]", q);
  }
  {
    Taxa taxa;
    check("example", parse_quartets("a b | c e\nc d | b f\na d | e f\n", taxa));
  }
  {
    Taxa taxa;
    check(qst_name(2, 2), gen_qst(taxa, 2, 2));
  }
  r.cases.push_back(reference_sequence_case());
  return r;
}

VerifyReport quartet_lower_bound(const VerifyParams& p) {
  const std::size_t n_max = bounded(p.n_max, 8, 4, kDefaultUnrootedCap, "--n-max");
  VerifyReport r{"thm3", {}};
  for (std::size_t n = 4; n <= n_max; ++n) {
    Taxa taxa;
    const auto q = gen_minimal_incompatible_quartets(taxa, n);
    const std::size_t want = floor_half(n - 2) * ceil_half(n - 2) + 1;
    const bool incompatible = !compat_quartets_brute(q).compatible();
    std::size_t certified = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (displays_all_but(witness_for(taxa, floor_half(n), ceil_half(n), k), q, k)) ++certified;
    }
    const bool ok = q.size() == want && taxa.size() == n && incompatible && certified == q.size();
    r.cases.push_back({"n=" + std::to_string(n), ok,
                       "size " + std::to_string(q.size()) + " (expected " + std::to_string(want) + "), " +
                           (incompatible ? "incompatible" : "compatible") + ", " + std::to_string(certified) + "/" +
                           std::to_string(q.size()) + " subsets with witness"});
  }
  return r;
}

VerifyReport character_lower_bound(const VerifyParams& p) {
  const std::size_t r_max = bounded(p.r_max, 5, 2, kDefaultUnrootedCap - 2, "--r-max");
  VerifyReport r{"thm5", {}};
  for (std::size_t states = 2; states <= r_max; ++states) {
    Taxa taxa;
    const auto c = gen_minimal_incompatible_characters(taxa, states);
    const std::size_t want = floor_half(states) * ceil_half(states) + 1;
    const auto m = is_minimally_incompatible_characters(c);
    const bool ok = c.size() == want && max_states(c) <= states && m.minimal();
    r.cases.push_back({"r=" + std::to_string(states), ok,
                       std::to_string(c.size()) + " characters (expected " + std::to_string(want) + "), max states " +
                           std::to_string(max_states(c)) + ", " + (m.minimal() ? "minimal" : "not minimal")});
  }
  return r;
}

VerifyReport cyclic_triplets(const VerifyParams& p) {
  const std::size_t r_max = bounded(p.r_max, 8, 2, 8, "--r-max");
  VerifyReport r{"thm6", {}};
  for (std::size_t k = 2; k <= r_max; ++k) {
    Taxa taxa;
    const auto triplets = gen_cyclic_triplets(taxa, k);
    const auto m = is_minimally_incompatible_triplets(triplets);
    const Label ell = taxa.intern(kFreshLabelName);
    const auto lifted = quartets_of_triplets(triplets, ell);
    const auto by_unification = compat_quartets(lifted, QuartetMethod::unification).verdict;
    bool agree = by_unification == Verdict::incompatible;
    std::string detail = "lift " + std::string(to_string(by_unification)) + " (unification)";
    if (label_set(lifted).size() <= kDefaultUnrootedCap) {
      const auto by_brute = compat_quartets_brute(lifted).verdict;
      agree = agree && by_brute == by_unification;
      detail += ", " + std::string(to_string(by_brute)) + " (brute)";
    }
    const bool ok = triplets.size() == k && m.minimal() && agree;
    r.cases.push_back({"r=" + std::to_string(k), ok,
                       std::to_string(triplets.size()) + " triplets, " + (m.minimal() ? "minimal" : "not minimal") +
                           ", " + detail});
  }
  return r;
}

VerifyReport triplet_agreement(const VerifyParams& p) {
  const std::size_t samples = bounded(p.samples, 300, 0, 100000, "--samples");
  const std::size_t max_labels = bounded(p.max_labels, 6, 3, kDefaultRootedCap, "--max-labels");
  VerifyReport r{"thm7-agreement", {}};
  std::mt19937_64 rng(p.seed + 2);
  for (std::size_t i = 0; i < samples; ++i) {
    Taxa taxa;
    const auto t = sample_triplets(rng, taxa, max_labels);
    const auto a = build_compat(t).verdict;
    const auto b = compat_triplets_subset_sweep(t).verdict;
    const auto c = compat_triplets_brute(t).verdict;
    r.cases.push_back({"random#" + std::to_string(i + 1) + " [" + summary(t, taxa) + "]", a == b && b == c,
                       std::string(to_string(a)) + " / " + std::string(to_string(b)) + " / " +
                           std::string(to_string(c))});
  }
  return r;
}

VerifyReport extraction(const VerifyParams& p) {
  const std::size_t samples = bounded(p.samples, 100, 0, 100000, "--samples");
  const std::size_t max_labels = bounded(p.max_labels, 8, 3, 16, "--max-labels");
  VerifyReport r{"thm8", {}};
  std::mt19937_64 rng(p.seed + 3);
  while (r.cases.size() < samples) {
    Taxa taxa;
    const auto labels = fresh_labels(taxa, draw(rng, 3, max_labels));
    const std::size_t triples = labels.size() * (labels.size() - 1) * (labels.size() - 2) / 6;
    const auto input = random_triplets(rng, labels, draw(rng, labels.size(), std::min(2 * labels.size(), 3 * triples)));
    if (build_compat(input).compatible()) continue;
    const auto input_labels = label_set(input);
    if (input.size() <= input_labels.size() - 1) continue;

    const auto sub = extract_incompatible_subset(input);
    const auto sub_labels = label_set(sub);
    const auto sorted_input = sorted(input);
    const bool subset = std::includes(sorted_input.begin(), sorted_input.end(), sub.begin(), sub.end());
    const bool proper = sub.size() < input.size();
    const bool bound = sub.size() + 1 <= sub_labels.size();
    const auto m = is_minimally_incompatible_triplets(sub);
    const bool connected = rs_graph(sub, sub_labels).connected();
    const bool ok = subset && proper && bound && m.minimal() && connected;
    std::ostringstream detail;
    detail << "|R|=" << input.size() << " |L|=" << input_labels.size() << " -> |R'|=" << sub.size()
           << " |L(R')|=" << sub_labels.size() << (m.minimal() ? ", minimal" : ", not minimal")
           << (connected ? ", connected" : ", disconnected");
    r.cases.push_back({"random#" + std::to_string(r.cases.size() + 1) + " [" + summary(input, taxa) + "]", ok,
                       detail.str()});
  }
  return r;
}

VerifyReport tight_triplets(const VerifyParams& p) {
  const std::size_t n_max = bounded(p.n_max, 12, 3, 64, "--n-max");
  VerifyReport r{"cor3", {}};
  for (std::size_t n = 3; n <= n_max; ++n) {
    Taxa taxa;
    const auto t = gen_tight_triplets(taxa, n);
    const auto m = is_minimally_incompatible_triplets(t);
    // Choosing a1 instead of a2 gives the same set up to a1 <-> a2 and b_j <-> b_{n-j}.
    const auto other = gen_tight_triplets(taxa, n, SharedLabel::a1);
    LabelMap swap;
    swap[taxa.at("a2")] = taxa.at("a1");
    for (std::size_t j = 1; j < n; ++j) swap[taxa.at("b" + std::to_string(j))] = taxa.at("b" + std::to_string(n - j));
    const bool isomorphic = sorted(relabel(other, swap)) == sorted(t);
    const bool ok = t.size() == n - 1 && label_set(t).size() == n && m.minimal() && isomorphic;
    r.cases.push_back({"n=" + std::to_string(n), ok,
                       std::to_string(t.size()) + " triplets over " + std::to_string(label_set(t).size()) +
                           " labels, " + (m.minimal() ? "minimal" : "not minimal") +
                           (isomorphic ? ", a1 variant isomorphic" : ", a1 variant differs")});
  }
  return r;
}

using Suite = VerifyReport (*)(const VerifyParams&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"obs1", &qst_cardinality},
      {"lemma1", &quartet_character_agreement},
      {"lemma2", &transpose_symmetry},
      {"lemma3-4", &qst_incompatible_and_witnesses},
      {"thm2-agreement", &unification_agreement},
      {"thm3", &quartet_lower_bound},
      {"thm5", &character_lower_bound},
      {"thm6", &cyclic_triplets},
      {"thm7-agreement", &triplet_agreement},
      {"thm8", &extraction},
      {"cor3", &tight_triplets},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport run_verification(std::string_view name, const VerifyParams& params) {
  for (const auto& [key, suite] : suites()) {
    if (key == name) return suite(params);
  }
  throw std::invalid_argument("unknown verification '" + std::string(name) + "'");
}

}  // namespace phylocompat::cli
