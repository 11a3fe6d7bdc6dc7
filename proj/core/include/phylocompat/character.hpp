#pragma once

#include <compare>
#include <span>
#include <vector>

#include "phylocompat/labels.hpp"

namespace phylocompat {

/// A partition of a label universe into states. States are anonymous: two characters
/// with the same parts in a different order are equal.
class Character {
 public:
  /// Throws std::invalid_argument on an empty part, overlapping parts or no parts at all.
  explicit Character(std::vector<LabelSet> parts);

  std::span<const LabelSet> parts() const noexcept { return parts_; }
  std::size_t state_count() const noexcept { return parts_.size(); }
  const LabelSet& universe() const noexcept { return universe_; }

  friend bool operator==(const Character& a, const Character& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Character& a, const Character& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<LabelSet> parts_;
  LabelSet universe_;
};

std::size_t max_states(std::span<const Character> characters);

}  // namespace phylocompat
