#include "phylocompat/quartet_graph.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace phylocompat {

namespace {

ColoredEdge make_edge(ClassId a, ClassId b) { return a < b ? ColoredEdge{a, b} : ColoredEdge{b, a}; }

bool in_set(std::span<const ClassId> sorted, ClassId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

std::vector<ClassId> sorted_handles(const QuartetGraph& graph, std::span<const ClassId> unified) {
  if (unified.size() < 2) throw std::invalid_argument("unification needs at least two classes");
  std::vector<ClassId> sorted(unified.begin(), unified.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("class listed twice in unification");
  }
  for (ClassId id : sorted) {
    if (!graph.contains(id)) throw std::invalid_argument("unknown class handle " + std::to_string(index_of(id)));
  }
  return sorted;
}

bool admissible_sorted(const QuartetGraph& graph, std::span<const ClassId> sorted) {
  for (std::size_t c = 0; c < graph.color_count(); ++c) {
    int touching = 0;
    for (const auto& e : graph.edges(c)) {
      if (in_set(sorted, e.u) || in_set(sorted, e.v)) ++touching;
    }
    if (touching > 1) return false;
  }
  return true;
}

}  // namespace

QuartetGraph::QuartetGraph(std::span<const Quartet> quartets) {
  if (quartets.empty()) throw std::invalid_argument("quartet graph needs at least one quartet");
  require_distinct(quartets);
  const LabelSet labels = label_set(quartets);
  // Singleton classes get the handles 0..|L|-1 in label order.
  for (std::size_t i = 0; i < labels.size(); ++i) {
    vertices_.push_back(ClassId{static_cast<std::uint32_t>(i)});
    members_.push_back(LabelSet{labels[i]});
  }
  next_ = ClassId{static_cast<std::uint32_t>(labels.size())};
  auto handle = [&](Label l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    return ClassId{static_cast<std::uint32_t>(it - labels.begin())};
  };
  for (const auto& q : quartets) {
    origins_.push_back(q);
    edges_.push_back({make_edge(handle(q.pair1()[0]), handle(q.pair1()[1])),
                      make_edge(handle(q.pair2()[0]), handle(q.pair2()[1]))});
    std::sort(edges_.back().begin(), edges_.back().end());
  }
}

std::size_t QuartetGraph::position(ClassId id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) {
    throw std::invalid_argument("unknown class handle " + std::to_string(index_of(id)));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool QuartetGraph::contains(ClassId id) const { return std::binary_search(vertices_.begin(), vertices_.end(), id); }

const LabelSet& QuartetGraph::members(ClassId id) const { return members_[position(id)]; }

std::optional<ClassId> QuartetGraph::class_of(Label label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (std::binary_search(members_[i].begin(), members_[i].end(), label)) return vertices_[i];
  }
  return std::nullopt;
}

std::size_t QuartetGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& color : edges_) total += color.size();
  return total;
}

bool admissible(const QuartetGraph& graph, std::span<const ClassId> unified) {
  return admissible_sorted(graph, sorted_handles(graph, unified));
}

QuartetGraph unify(const QuartetGraph& graph, std::span<const ClassId> unified) {
  const auto sorted = sorted_handles(graph, unified);
  if (!admissible_sorted(graph, sorted)) throw std::invalid_argument("class set is not admissible");

  QuartetGraph out = graph;
  const ClassId fresh = graph.next_;
  out.next_ = ClassId{index_of(fresh) + 1};

  std::vector<Label> merged;
  out.vertices_.clear();
  out.members_.clear();
  for (std::size_t i = 0; i < graph.vertices_.size(); ++i) {
    if (in_set(sorted, graph.vertices_[i])) {
      merged.insert(merged.end(), graph.members_[i].begin(), graph.members_[i].end());
    } else {
      out.vertices_.push_back(graph.vertices_[i]);
      out.members_.push_back(graph.members_[i]);
    }
  }
  out.vertices_.push_back(fresh);  // largest handle so far, order is kept
  out.members_.push_back(make_label_set(std::move(merged)));

  for (auto& color : out.edges_) {
    bool swallowed = false;
    for (auto& e : color) {
      const bool iu = in_set(sorted, e.u);
      const bool iv = in_set(sorted, e.v);
      if (iu && iv) {
        swallowed = true;
      } else if (iu) {
        e = make_edge(fresh, e.v);
      } else if (iv) {
        e = make_edge(e.u, fresh);
      }
    }
    if (swallowed) {
      color.clear();
    } else {
      std::sort(color.begin(), color.end());
    }
  }
  return out;
}

std::vector<ClassQuartet> quartet_set_of_graph(const QuartetGraph& graph) {
  std::vector<ClassQuartet> out;
  for (std::size_t c = 0; c < graph.color_count(); ++c) {
    const auto edges = graph.edges(c);
    if (edges.empty()) continue;
    if (edges.size() != 2) throw std::logic_error("color with a single edge");
    out.emplace_back(edges[0].u, edges[0].v, edges[1].u, edges[1].v);
  }
  return out;
}

std::string state_key(const QuartetGraph& graph) {
  std::ostringstream key;
  auto rep = [&](ClassId id) { return index_of(graph.members(id).front()); };
  for (std::size_t c = 0; c < graph.color_count(); ++c) {
    const auto edges = graph.edges(c);
    if (edges.empty()) continue;
    std::array<std::pair<std::uint32_t, std::uint32_t>, 2> named{};
    for (std::size_t i = 0; i < 2; ++i) {
      const auto x = rep(edges[i].u);
      const auto y = rep(edges[i].v);
      named[i] = x < y ? std::pair{x, y} : std::pair{y, x};
    }
    std::sort(named.begin(), named.end());
    key << c << ':' << named[0].first << '-' << named[0].second << ',' << named[1].first << '-'
        << named[1].second << ';';
  }
  return key.str();
}

namespace {

class UnificationSearch {
 public:
  UnificationSearch(const UnificationOptions& options, UnificationStats* stats)
      : options_(options), stats_(stats) {}

  bool run(const QuartetGraph& graph) {
    if (graph.edgeless()) return true;
    std::string key = state_key(graph);
    if (dead_.count(key) != 0) {
      if (stats_ != nullptr) ++stats_->memo_hits;
      return false;
    }
    if (stats_ != nullptr) ++stats_->states_expanded;

    std::vector<ClassId> active;
    for (ClassId id : graph.vertices()) {
      for (std::size_t c = 0; c < graph.color_count(); ++c) {
        const auto edges = graph.edges(c);
        if (std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return e.u == id || e.v == id; })) {
          active.push_back(id);
          break;
        }
      }
    }
    const std::size_t largest = std::min(active.size(), options_.max_step_size);
    std::vector<ClassId> chosen;
    for (std::size_t k = 2; k <= largest; ++k) {
      if (extend(graph, active, 0, k, chosen)) return true;
    }
    dead_.insert(std::move(key));
    return false;
  }

  UnificationSequence take() { return std::move(steps_); }

 private:
  // Grows `chosen` to size k in lexicographic order. Admissibility is monotone under
  // shrinking, so an inadmissible prefix cuts off all of its extensions.
  bool extend(const QuartetGraph& graph, const std::vector<ClassId>& active, std::size_t from, std::size_t k,
              std::vector<ClassId>& chosen) {
    if (chosen.size() == k) {
      QuartetGraph next = unify(graph, chosen);
      steps_.push_back({chosen, graph.next_class()});
      if (run(next)) return true;
      steps_.pop_back();
      return false;
    }
    for (std::size_t i = from; i + (k - chosen.size()) <= active.size(); ++i) {
      chosen.push_back(active[i]);
      const bool ok = chosen.size() < 2 || admissible_sorted(graph, chosen);
      if (ok && extend(graph, active, i + 1, k, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const UnificationOptions& options_;
  UnificationStats* stats_;
  std::unordered_set<std::string> dead_;
  UnificationSequence steps_;
};

}  // namespace

std::optional<UnificationSequence> find_complete_unification(const QuartetGraph& graph,
                                                             const UnificationOptions& options,
                                                             UnificationStats* stats) {
  UnificationSearch search(options, stats);
  if (!search.run(graph)) return std::nullopt;
  return search.take();
}

QuartetGraph replay(const QuartetGraph& graph, const UnificationSequence& sequence) {
  QuartetGraph current = graph;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto& step = sequence[i];
    if (step.new_class != current.next_class()) {
      throw std::invalid_argument("step " + std::to_string(i + 1) + " names an unexpected new class");
    }
    if (!admissible(current, step.unified)) {
      throw std::invalid_argument("step " + std::to_string(i + 1) + " is not admissible");
    }
    current = unify(current, step.unified);
  }
  return current;
}

std::string to_dot(const QuartetGraph& graph, const Taxa& taxa) {
  auto vertex_name = [&](ClassId id) {
    std::vector<std::string> names;
    for (Label l : graph.members(id)) names.push_back(taxa.name(l));
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) {
      if (!out.empty()) out += ',';
      out += n;
    }
    return out;
  };
  std::set<std::string> vertices;
  for (ClassId id : graph.vertices()) vertices.insert(vertex_name(id));

  std::ostringstream dot;
  dot << "graph quartet_graph {\n";
  for (const auto& v : vertices) dot << "  \"" << v << "\";\n";
  for (std::size_t c = 0; c < graph.color_count(); ++c) {
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& e : graph.edges(c)) {
      auto x = vertex_name(e.u);
      auto y = vertex_name(e.v);
      if (y < x) std::swap(x, y);
      lines.emplace_back(std::move(x), std::move(y));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [x, y] : lines) {
      dot << "  \"" << x << "\" -- \"" << y << "\" [label=\"q" << c + 1 << "\"];\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace phylocompat
