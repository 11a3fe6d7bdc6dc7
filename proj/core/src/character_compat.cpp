#include "phylocompat/character_compat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "minimality.hpp"
#include "phylocompat/enumerate.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/tree_ops.hpp"

namespace phylocompat {

Character chi_of_quartet(const Quartet& quartet, std::span<const Label> universe) {
  for (Label l : quartet.labels()) {
    if (std::find(universe.begin(), universe.end(), l) == universe.end()) {
      throw std::invalid_argument("quartet label outside the character universe");
    }
  }
  std::vector<LabelSet> parts{{quartet.pair1()[0], quartet.pair1()[1]}, {quartet.pair2()[0], quartet.pair2()[1]}};
  for (Label l : universe) {
    if (!quartet.contains(l)) parts.push_back({l});
  }
  return Character(std::move(parts));
}

std::vector<Character> c_of_q(std::span<const Quartet> quartets) {
  if (quartets.empty()) throw std::invalid_argument("empty quartet set");
  require_distinct(quartets);
  const LabelSet universe = label_set(quartets);
  std::vector<Character> out;
  out.reserve(quartets.size());
  for (const auto& q : quartets) out.push_back(chi_of_quartet(q, universe));
  return out;
}

namespace {

const LabelSet& check_input(std::span<const Character> characters) {
  if (characters.empty()) throw std::invalid_argument("empty character set");
  const LabelSet& universe = characters.front().universe();
  for (const auto& c : characters) {
    if (c.universe() != universe) throw std::invalid_argument("characters do not share one label universe");
  }
  std::vector<Character> sorted(characters.begin(), characters.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate character");
  }
  if (universe.size() < 2) throw std::invalid_argument("characters need a universe of at least two labels");
  return universe;
}

// The character restricted to the first `placed` labels of the universe.
Character restricted(const Character& c, std::span<const Label> prefix) {
  std::vector<LabelSet> parts;
  for (const auto& part : c.parts()) {
    LabelSet kept;
    for (Label l : part) {
      if (std::find(prefix.begin(), prefix.end(), l) != prefix.end()) kept.push_back(l);
    }
    if (!kept.empty()) parts.push_back(std::move(kept));
  }
  return Character(std::move(parts));
}

}  // namespace

CharacterReport compat_characters_brute(std::span<const Character> characters, const BruteOptions& options) {
  const LabelSet& universe = check_input(characters);
  if (universe.size() > options.max_labels) {
    throw LimitExceeded("brute force is capped at " + std::to_string(options.max_labels) + " labels, input has " +
                        std::to_string(universe.size()));
  }
  CharacterReport report;
  if (universe.size() == 2) {
    // Every partition of two labels is convex on the single edge.
    TreeBuilder b;
    b.add_edge(b.add_leaf(universe[0]), b.add_leaf(universe[1]));
    report.verdict = Verdict::compatible;
    report.witness = b.build_unrooted();
    return report;
  }

  // Convexity is inherited by restrictions, and the partial tree after `placed` insertions
  // is the restriction of each of its completions, so every level can prune.
  std::vector<std::vector<Character>> at_level(universe.size() + 1);
  for (std::size_t p = 3; p <= universe.size(); ++p) {
    const std::span<const Label> prefix(universe.data(), p);
    for (const auto& c : characters) {
      Character r = restricted(c, prefix);
      if (r.state_count() < p) at_level[p].push_back(std::move(r));  // all-singleton is trivially convex
    }
  }
  auto tree = search_unrooted_binary(universe, [&](const UnrootedTree& partial, std::size_t placed) {
    return std::all_of(at_level[placed].begin(), at_level[placed].end(),
                       [&](const Character& c) { return is_convex(partial, c); });
  });
  if (tree) {
    report.verdict = Verdict::compatible;
    report.witness = std::move(tree);
  } else {
    report.certificate.emplace(characters.begin(), characters.end());
  }
  return report;
}

MinimalityReport is_minimally_incompatible_characters(std::span<const Character> characters,
                                                      const BruteOptions& options) {
  check_input(characters);
  return detail::leave_one_out(characters, [&](std::span<const Character> subset) {
    return !compat_characters_brute(subset, options).compatible();
  });
}

}  // namespace phylocompat
