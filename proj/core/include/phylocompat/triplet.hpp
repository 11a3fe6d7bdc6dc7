#pragma once

#include <array>
#include <compare>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phylocompat/labels.hpp"

namespace phylocompat {

/// Rooted triplet ab|c: a and b form a cherry, c is the outgroup.
class Triplet {
 public:
  Triplet(Label a, Label b, Label outgroup) : cherry_{a, b}, outgroup_(outgroup) {
    if (a == b || a == outgroup || b == outgroup) {
      throw std::invalid_argument("triplet needs three distinct labels");
    }
    if (cherry_[1] < cherry_[0]) std::swap(cherry_[0], cherry_[1]);
  }

  const std::array<Label, 2>& cherry() const noexcept { return cherry_; }
  Label outgroup() const noexcept { return outgroup_; }

  bool contains(Label x) const noexcept { return cherry_[0] == x || cherry_[1] == x || outgroup_ == x; }

  friend auto operator<=>(const Triplet&, const Triplet&) = default;
  friend bool operator==(const Triplet&, const Triplet&) = default;

 private:
  std::array<Label, 2> cherry_;
  Label outgroup_;
};

LabelSet label_set(std::span<const Triplet> triplets);
void require_distinct(std::span<const Triplet> triplets);
std::vector<Triplet> relabel(std::span<const Triplet> triplets, const LabelMap& map);

}  // namespace phylocompat
