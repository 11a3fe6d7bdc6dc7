#pragma once

#include <span>

#include "phylocompat/character.hpp"
#include "phylocompat/quartet.hpp"
#include "phylocompat/tree.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

/// Forgets the root; a degree-two root is suppressed. Requires at least three leaves.
UnrootedTree unroot(const RootedTree& tree);

/// T|L: minimal subtree spanning the leaves in `labels` with degree-two vertices suppressed.
/// Two labels give the single-edge tree. Throws std::invalid_argument for unknown labels or
/// fewer than two labels.
UnrootedTree restrict_to(const UnrootedTree& tree, std::span<const Label> labels);

/// Rooted restriction: the surviving vertex closest to the old root becomes the root.
/// Accepts a single label (yielding a one-leaf tree).
RootedTree restrict_to(const RootedTree& tree, std::span<const Label> labels);

/// True iff the a-b path and the c-d path of ab|cd share no vertex.
bool displays_quartet(const UnrootedTree& tree, const Quartet& quartet);

/// True iff lca(cherry) lies strictly below lca(all three labels).
bool displays_triplet(const RootedTree& tree, const Triplet& triplet);

/// True iff the minimal subtrees spanning each state are pairwise vertex-disjoint.
/// The character's universe must be a subset of the tree's leaves.
bool is_convex(const UnrootedTree& tree, const Character& character);

}  // namespace phylocompat
