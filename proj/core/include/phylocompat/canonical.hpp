#pragma once

#include <string>

#include "phylocompat/tree.hpp"

namespace phylocompat {

/// Byte strings that are equal iff the trees are isomorphic as leaf-labelled trees
/// (rooted trees must also agree on the root). Not a stable wire format.
std::string canonical_form(const UnrootedTree& tree);
std::string canonical_form(const RootedTree& tree);

}  // namespace phylocompat
