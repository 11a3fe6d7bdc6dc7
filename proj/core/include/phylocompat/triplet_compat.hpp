#pragma once

#include <span>
#include <utility>
#include <vector>

#include "phylocompat/quartet.hpp"
#include "phylocompat/report.hpp"
#include "phylocompat/tree.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

/// [R,S]: vertices S, edge {a,b} iff some ab|c in R has a, b and c all in S.
struct RSGraph {
  LabelSet vertices;
  std::vector<std::pair<Label, Label>> edges;  // first < second, sorted, no repeats

  /// Connected components, each sorted, ordered by smallest label.
  std::vector<LabelSet> components() const;
  bool connected() const { return components().size() <= 1; }
};

RSGraph rs_graph(std::span<const Triplet> triplets, std::span<const Label> subset);

using TripletReport = CompatReport<RootedTree, Triplet>;

/// Recursive partition by [R,S] components (the BUILD procedure). Returns a witness tree, or
/// as certificate the triplets lying inside a label set S with [R,S] connected.
/// Throws std::invalid_argument for empty or duplicated input.
TripletReport build_compat(std::span<const Triplet> triplets);

/// Compatibility decided by sweeping every S with |S| >= 3 and testing [R,S] for
/// connectivity. No witness; the certificate is R|S for the first connected S (subsets in
/// increasing bitmask order over sorted labels). Throws LimitExceeded above `max_labels`, and
/// above kSubsetSweepHardCap whatever `max_labels` says.
inline constexpr std::size_t kSubsetSweepHardCap = 24;
TripletReport compat_triplets_subset_sweep(std::span<const Triplet> triplets, std::size_t max_labels = 12);

/// Searches rooted binary trees on L(R); the first tree displaying all of R in enumeration
/// order is the witness. Throws LimitExceeded above the cap (default 7 labels).
TripletReport compat_triplets_brute(std::span<const Triplet> triplets,
                                    const BruteOptions& options = {kDefaultRootedCap});

enum class TripletMethod { build, subset_sweep, brute };

TripletReport compat_triplets(std::span<const Triplet> triplets, TripletMethod method,
                              const BruteOptions& options = {kDefaultRootedCap});

MinimalityReport is_minimally_incompatible_triplets(std::span<const Triplet> triplets,
                                                    TripletMethod method = TripletMethod::build,
                                                    const BruteOptions& options = {kDefaultRootedCap});

/// Shrinks an incompatible set to a minimal incompatible subset by dropping one triplet at a
/// time while the rest stays incompatible. Triplets whose cherry edge is repeated or lies on
/// a cycle of [R',L(R')] are tried first, then canonical order. Result is in canonical order.
/// Throws std::invalid_argument if the input is compatible.
std::vector<Triplet> extract_incompatible_subset(std::span<const Triplet> triplets);

/// ab|c ell -> ab|c. Every quartet must contain `ell`.
std::vector<Triplet> triplets_of_quartets(std::span<const Quartet> quartets, Label ell);

/// ab|c -> ab|c ell. `ell` must not occur in the triplets.
std::vector<Quartet> quartets_of_triplets(std::span<const Triplet> triplets, Label ell);

}  // namespace phylocompat
