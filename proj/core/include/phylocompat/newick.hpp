#pragma once

#include <string>
#include <string_view>

#include "phylocompat/tree.hpp"

namespace phylocompat {

/// Parses topology-only Newick: leaf names, nested parentheses, terminating ';'.
/// Branch lengths, internal names and quoting are rejected. Leaf names are interned into
/// `taxa`. Redundant parentheses are suppressed, so "((a,b));" is the cherry (a,b).
/// Throws ParseError (with line/column) on malformed text or duplicate leaves.
RootedTree parse_newick(std::string_view text, Taxa& taxa);

/// Children are emitted in order of the smallest leaf name below them, so isomorphic
/// trees print identically. Unrooted trees are rooted at their centroid vertex, or at the
/// midpoint of the centroid edge when there are two centroids.
std::string serialize_newick(const RootedTree& tree, const Taxa& taxa);
std::string serialize_newick(const UnrootedTree& tree, const Taxa& taxa);

}  // namespace phylocompat
