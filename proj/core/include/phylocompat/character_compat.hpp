#pragma once

#include <span>
#include <vector>

#include "phylocompat/character.hpp"
#include "phylocompat/quartet.hpp"
#include "phylocompat/report.hpp"
#include "phylocompat/tree.hpp"

namespace phylocompat {

/// Character of ab|cd over `universe`: states {a,b}, {c,d} and a singleton for every other
/// label. Throws std::invalid_argument if the quartet is not inside the universe.
Character chi_of_quartet(const Quartet& quartet, std::span<const Label> universe);

/// One character per quartet over L(Q), in input order. Rejects empty or duplicated input.
std::vector<Character> c_of_q(std::span<const Quartet> quartets);

using CharacterReport = CompatReport<UnrootedTree, Character>;

/// Searches unrooted binary trees on the common universe for one on which every character
/// is convex. All characters must share one universe of at least two labels; a two-label
/// universe is answered by the single-edge tree. Throws LimitExceeded above the label cap.
CharacterReport compat_characters_brute(std::span<const Character> characters, const BruteOptions& options = {});

MinimalityReport is_minimally_incompatible_characters(std::span<const Character> characters,
                                                      const BruteOptions& options = {});

}  // namespace phylocompat
