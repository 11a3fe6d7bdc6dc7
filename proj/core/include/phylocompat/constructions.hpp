#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "phylocompat/character.hpp"
#include "phylocompat/labels.hpp"
#include "phylocompat/quartet.hpp"
#include "phylocompat/tree.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

// Generated label names are fixed (a1..as, b1..bt, a, ell) so that output files are stable
// across runs. All generators intern their names into the given Taxa.

/// L_{s,t} = {a1..as, b1..bt}.
struct StLabels {
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<Label> a;  // a[i-1] is a_i
  std::vector<Label> b;
};

StLabels qst_labels(Taxa& taxa, std::size_t s, std::size_t t);

/// q0 = a1 b1 | as bt.
Quartet qst_q0(const StLabels& labels);
/// q_{x,y} = a_x a_{x+1} | b_y b_{y+1}, 1 <= x < s, 1 <= y < t.
Quartet qst_qxy(const StLabels& labels, std::size_t x, std::size_t y);

/// Q_{s,t}: q0 followed by the q_{i,j} with i major. (s-1)(t-1)+1 quartets; s, t >= 2.
std::vector<Quartet> gen_qst(Taxa& taxa, std::size_t s, std::size_t t);

/// Bijection L_{s,t} -> L_{t,s} swapping a_i and b_i; it carries Q_{s,t} onto Q_{t,s}.
LabelMap qst_transpose_map(Taxa& taxa, std::size_t s, std::size_t t);

/// Tree with one internal edge: all a_i on one side, all b_j on the other. Displays every
/// quartet of Q_{s,t} except q0.
UnrootedTree qst_witness_without_q0(Taxa& taxa, std::size_t s, std::size_t t);

/// Tree with a four-vertex spine carrying the a_i with i <= x and the b_j with j <= y on one
/// half and the rest on the other half. Displays every quartet of Q_{s,t} except q_{x,y}.
UnrootedTree qst_witness_without_qxy(Taxa& taxa, std::size_t s, std::size_t t, std::size_t x, std::size_t y);

/// Q_{floor(n/2), ceil(n/2)}: a minimally incompatible quartet set on n >= 4 labels with
/// floor((n-2)/2) * ceil((n-2)/2) + 1 members.
std::vector<Quartet> gen_minimal_incompatible_quartets(Taxa& taxa, std::size_t n);

/// The characters of the quartet set above for n = r + 2: at most r states each,
/// floor(r/2) * ceil(r/2) + 1 characters, r >= 2.
std::vector<Character> gen_minimal_incompatible_characters(Taxa& taxa, std::size_t r);

/// R_r = {a b_r | b_1} and a b_i | b_{i+1} for 1 <= i < r, over {a, b1..br}; r >= 2.
std::vector<Triplet> gen_cyclic_triplets(Taxa& taxa, std::size_t r);

enum class SharedLabel { a1, a2 };

/// n-1 triplets over n >= 3 labels, incompatible with every proper subset compatible:
/// Q_{2,n-1} mapped to triplets through its shared label (a2 by default).
std::vector<Triplet> gen_tight_triplets(Taxa& taxa, std::size_t n, SharedLabel shared = SharedLabel::a2);

inline constexpr std::string_view kFreshLabelName = "ell";

}  // namespace phylocompat
