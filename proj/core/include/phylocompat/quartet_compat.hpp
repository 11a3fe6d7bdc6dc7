#pragma once

#include <span>

#include "phylocompat/quartet.hpp"
#include "phylocompat/quartet_graph.hpp"
#include "phylocompat/report.hpp"
#include "phylocompat/tree.hpp"

namespace phylocompat {

using QuartetReport = CompatReport<UnrootedTree, Quartet>;

enum class QuartetMethod { brute, unification };

/// Searches unrooted binary trees on L(Q) for one displaying all of Q. The returned witness
/// is the first such tree in enumeration order. Throws LimitExceeded above the label cap and
/// std::invalid_argument for empty or duplicated input.
QuartetReport compat_quartets_brute(std::span<const Quartet> quartets, const BruteOptions& options = {});

/// Brute force or the quartet-graph unification search; the latter yields no witness tree.
QuartetReport compat_quartets(std::span<const Quartet> quartets, QuartetMethod method,
                              const BruteOptions& options = {});

MinimalityReport is_minimally_incompatible_quartets(std::span<const Quartet> quartets,
                                                    QuartetMethod method = QuartetMethod::brute,
                                                    const BruteOptions& options = {});

}  // namespace phylocompat
