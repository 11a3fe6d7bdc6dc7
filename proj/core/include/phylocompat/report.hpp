#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace phylocompat {

enum class Verdict { compatible, incompatible };

constexpr std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::compatible ? "compatible" : "incompatible";
}

/// Verdict plus certificate. A witness, when present, displays every input constraint; a
/// certificate, when present, is an incompatible subset of the input.
template <class Tree, class Item>
struct CompatReport {
  Verdict verdict = Verdict::incompatible;
  std::optional<Tree> witness;
  std::optional<std::vector<Item>> certificate;

  bool compatible() const noexcept { return verdict == Verdict::compatible; }
};

/// Result of checking that a set is incompatible while each one-element-smaller subset is
/// compatible (which covers every proper subset, since compatibility is inherited by subsets).
struct MinimalityReport {
  bool incompatible = false;
  /// Indices i such that the set without element i is still incompatible.
  std::vector<std::size_t> incompatible_without;

  bool minimal() const noexcept { return incompatible && incompatible_without.empty(); }
};

/// Caps for the exhaustive tree-search oracles. Inputs above the cap are refused with
/// LimitExceeded rather than truncated.
struct BruteOptions {
  std::size_t max_labels = 9;
};

inline constexpr std::size_t kDefaultUnrootedCap = 9;
inline constexpr std::size_t kDefaultRootedCap = 7;

}  // namespace phylocompat
