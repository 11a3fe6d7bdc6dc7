#include "phylocompat/quartet_compat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "minimality.hpp"
#include "phylocompat/enumerate.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/tree_ops.hpp"

namespace phylocompat {

namespace {

void check_input(std::span<const Quartet> quartets) {
  if (quartets.empty()) throw std::invalid_argument("empty quartet set");
  require_distinct(quartets);
}

}  // namespace

QuartetReport compat_quartets_brute(std::span<const Quartet> quartets, const BruteOptions& options) {
  check_input(quartets);
  const LabelSet labels = label_set(quartets);
  if (labels.size() > options.max_labels) {
    throw LimitExceeded("brute force is capped at " + std::to_string(options.max_labels) + " labels, input has " +
                        std::to_string(labels.size()));
  }
  // A quartet is decided as soon as its last label is placed; later insertions never
  // change whether it is displayed.
  std::vector<std::vector<Quartet>> due(labels.size() + 1);
  for (const auto& q : quartets) {
    std::size_t last = 0;
    for (Label l : q.labels()) {
      last = std::max(last, static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
    }
    due[last + 1].push_back(q);
  }
  auto tree = search_unrooted_binary(labels, [&](const UnrootedTree& partial, std::size_t placed) {
    return std::all_of(due[placed].begin(), due[placed].end(),
                       [&](const Quartet& q) { return displays_quartet(partial, q); });
  });

  QuartetReport report;
  if (tree) {
    report.verdict = Verdict::compatible;
    report.witness = std::move(tree);
  } else {
    report.certificate.emplace(quartets.begin(), quartets.end());
  }
  return report;
}

QuartetReport compat_quartets(std::span<const Quartet> quartets, QuartetMethod method, const BruteOptions& options) {
  if (method == QuartetMethod::brute) return compat_quartets_brute(quartets, options);
  check_input(quartets);
  QuartetReport report;
  if (find_complete_unification(QuartetGraph(quartets))) {
    report.verdict = Verdict::compatible;
  } else {
    report.certificate.emplace(quartets.begin(), quartets.end());
  }
  return report;
}

MinimalityReport is_minimally_incompatible_quartets(std::span<const Quartet> quartets, QuartetMethod method,
                                                    const BruteOptions& options) {
  check_input(quartets);
  return detail::leave_one_out(quartets, [&](std::span<const Quartet> subset) {
    return !compat_quartets(subset, method, options).compatible();
  });
}

}  // namespace phylocompat
