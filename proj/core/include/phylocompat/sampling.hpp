#pragma once

#include <random>
#include <span>
#include <vector>

#include "phylocompat/quartet.hpp"
#include "phylocompat/tree.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

// Random instance generators for property checks. Results depend only on the engine state,
// so a fixed seed reproduces a run.

/// Uniform over the (2n-5)!! unrooted binary trees on `labels` (n >= 3). The draw is a tree
/// index, so n is limited to 19 (18 rooted); larger n throws std::overflow_error.
UnrootedTree random_unrooted_binary(std::mt19937_64& rng, std::span<const Label> labels);
/// Uniform over the (2n-3)!! rooted binary trees on `labels` (n >= 2).
RootedTree random_rooted_binary(std::mt19937_64& rng, std::span<const Label> labels);

/// `count` distinct quartets drawn uniformly from all 3*C(n,4) quartets over `labels`.
/// Throws std::invalid_argument if `count` exceeds that number.
std::vector<Quartet> random_quartets(std::mt19937_64& rng, std::span<const Label> labels, std::size_t count);
std::vector<Triplet> random_triplets(std::mt19937_64& rng, std::span<const Label> labels, std::size_t count);

/// `count` distinct quartets among those the tree displays (so the set is compatible).
std::vector<Quartet> random_displayed_quartets(std::mt19937_64& rng, const UnrootedTree& tree, std::size_t count);
std::vector<Triplet> random_displayed_triplets(std::mt19937_64& rng, const RootedTree& tree, std::size_t count);

}  // namespace phylocompat
