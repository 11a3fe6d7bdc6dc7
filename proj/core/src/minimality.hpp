#pragma once

#include <span>
#include <vector>

#include "phylocompat/report.hpp"

namespace phylocompat::detail {

// `incompatible(subset)` decides one subset; every leave-one-out subset is tried.
template <class Item, class Check>
MinimalityReport leave_one_out(std::span<const Item> items, Check&& incompatible) {
  MinimalityReport report;
  report.incompatible = incompatible(items);
  std::vector<Item> rest;
  for (std::size_t i = 0; i < items.size(); ++i) {
    rest.assign(items.begin(), items.end());
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (rest.empty()) continue;  // the empty set is compatible
    if (incompatible(std::span<const Item>(rest))) report.incompatible_without.push_back(i);
  }
  return report;
}

}  // namespace phylocompat::detail
