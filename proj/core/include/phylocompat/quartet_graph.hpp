#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phylocompat/labels.hpp"
#include "phylocompat/quartet.hpp"

namespace phylocompat {

/// Handle for a vertex of a quartet graph; each vertex stands for a class of labels.
enum class ClassId : std::uint32_t {};

constexpr std::uint32_t index_of(ClassId id) noexcept { return static_cast<std::uint32_t>(id); }

using ClassQuartet = BasicQuartet<ClassId>;

struct ColoredEdge {
  ClassId u;  // u < v
  ClassId v;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Edge-coloured graph over label classes. Color i belongs to the i-th input quartet and
/// carries either its two edges or none (once a unification swallowed one of them).
class QuartetGraph {
 public:
  /// One singleton class per label of L(Q), in label order, then ab and cd edges per ab|cd.
  /// Throws std::invalid_argument on an empty or duplicated quartet set.
  explicit QuartetGraph(std::span<const Quartet> quartets);

  /// Class handles in ascending order.
  const std::vector<ClassId>& vertices() const noexcept { return vertices_; }
  bool contains(ClassId id) const;
  const LabelSet& members(ClassId id) const;
  std::optional<ClassId> class_of(Label label) const;

  std::size_t color_count() const noexcept { return edges_.size(); }
  std::span<const ColoredEdge> edges(std::size_t color) const { return edges_.at(color); }
  const Quartet& origin(std::size_t color) const { return origins_.at(color); }
  std::size_t edge_count() const noexcept;
  bool edgeless() const noexcept { return edge_count() == 0; }

  /// Handle the next unification will allocate.
  ClassId next_class() const noexcept { return next_; }

 private:
  friend QuartetGraph unify(const QuartetGraph& graph, std::span<const ClassId> unified);

  std::size_t position(ClassId id) const;

  std::vector<ClassId> vertices_;
  std::vector<LabelSet> members_;  // parallel to vertices_
  std::vector<Quartet> origins_;
  std::vector<std::vector<ColoredEdge>> edges_;
  ClassId next_{0};
};

inline QuartetGraph quartet_graph(std::span<const Quartet> quartets) { return QuartetGraph(quartets); }

/// True iff, for every color, at most one edge of that color touches `unified` (an edge with
/// both ends inside counts once). Throws std::invalid_argument for unknown or repeated
/// handles or fewer than two of them.
bool admissible(const QuartetGraph& graph, std::span<const ClassId> unified);

/// Merges `unified` into a fresh class `graph.next_class()`: edges leaving the set are
/// re-attached to the new class, colors with an edge inside the set lose both edges.
/// Throws std::invalid_argument when the set is not admissible.
QuartetGraph unify(const QuartetGraph& graph, std::span<const ClassId> unified);

/// Q_G: one quartet per color that still has its two edges, in color order.
/// Throws std::logic_error if some color has a single edge.
std::vector<ClassQuartet> quartet_set_of_graph(const QuartetGraph& graph);

struct UnificationStep {
  std::vector<ClassId> unified;
  ClassId new_class;

  friend bool operator==(const UnificationStep&, const UnificationStep&) = default;
};

using UnificationSequence = std::vector<UnificationStep>;

struct UnificationOptions {
  /// Largest class set tried in one step. The default is unbounded (exhaustive).
  std::size_t max_step_size = std::numeric_limits<std::size_t>::max();
};

struct UnificationStats {
  std::size_t states_expanded = 0;
  std::size_t memo_hits = 0;
};

/// Exhaustive backtracking for a unification sequence ending in an edgeless graph. Candidate
/// sets are tried smallest first, pairs before triples, each size in lexicographic handle
/// order; states already known to be dead ends are skipped. An empty sequence is returned
/// for a graph that is already edgeless.
std::optional<UnificationSequence> find_complete_unification(const QuartetGraph& graph,
                                                             const UnificationOptions& options = {},
                                                             UnificationStats* stats = nullptr);

/// Applies a recorded sequence step by step. Throws std::invalid_argument if a step is not
/// admissible or its `new_class` differs from the handle the graph would allocate.
QuartetGraph replay(const QuartetGraph& graph, const UnificationSequence& sequence);

/// Memo key: colors that still carry edges, each endpoint named by the smallest label of its
/// class. Edgeless classes and class contents beyond identity are ignored.
std::string state_key(const QuartetGraph& graph);

/// Graphviz rendering: vertices named by their sorted label names joined with ',', one
/// undirected edge per colored edge with label="q<k>" (k = 1-based color index).
std::string to_dot(const QuartetGraph& graph, const Taxa& taxa);

}  // namespace phylocompat
