#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phylocompat/labels.hpp"

namespace phylocompat {

/// Unrooted split ab|cd over four distinct endpoints. Stored canonically: each pair sorted,
/// then the pairs sorted, so ab|cd, ba|cd and cd|ab compare equal.
template <class T>
class BasicQuartet {
 public:
  BasicQuartet(T a, T b, T c, T d) : first_{a, b}, second_{c, d} {
    if (a == b || a == c || a == d || b == c || b == d || c == d) {
      throw std::invalid_argument("quartet needs four distinct labels");
    }
    if (first_[1] < first_[0]) std::swap(first_[0], first_[1]);
    if (second_[1] < second_[0]) std::swap(second_[0], second_[1]);
    if (second_ < first_) std::swap(first_, second_);
  }

  const std::array<T, 2>& pair1() const noexcept { return first_; }
  const std::array<T, 2>& pair2() const noexcept { return second_; }

  std::array<T, 4> labels() const {
    std::array<T, 4> out{first_[0], first_[1], second_[0], second_[1]};
    std::sort(out.begin(), out.end());
    return out;
  }

  bool contains(T x) const noexcept {
    return first_[0] == x || first_[1] == x || second_[0] == x || second_[1] == x;
  }

  friend auto operator<=>(const BasicQuartet&, const BasicQuartet&) = default;
  friend bool operator==(const BasicQuartet&, const BasicQuartet&) = default;

 private:
  std::array<T, 2> first_;
  std::array<T, 2> second_;
};

using Quartet = BasicQuartet<Label>;

/// Union of the labels of all quartets, sorted.
LabelSet label_set(std::span<const Quartet> quartets);

/// Throws std::invalid_argument if two quartets are equal after canonicalization.
void require_distinct(std::span<const Quartet> quartets);

std::vector<Quartet> relabel(std::span<const Quartet> quartets, const LabelMap& map);

}  // namespace phylocompat
