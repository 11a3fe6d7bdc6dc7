#include <algorithm>
#include <stdexcept>

#include "phylocompat/character.hpp"
#include "phylocompat/quartet.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

namespace {

Label mapped(const LabelMap& map, Label label) {
  auto it = map.find(label);
  if (it == map.end()) throw std::invalid_argument("label missing from relabelling map");
  return it->second;
}

template <class T>
void require_distinct_impl(std::span<const T> items, const char* what) {
  std::vector<T> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument(std::string("duplicate ") + what);
  }
}

}  // namespace

LabelSet label_set(std::span<const Quartet> quartets) {
  std::vector<Label> all;
  all.reserve(quartets.size() * 4);
  for (const auto& q : quartets) {
    for (Label l : q.labels()) all.push_back(l);
  }
  return make_label_set(std::move(all));
}

void require_distinct(std::span<const Quartet> quartets) { require_distinct_impl(quartets, "quartet"); }

std::vector<Quartet> relabel(std::span<const Quartet> quartets, const LabelMap& map) {
  std::vector<Quartet> out;
  out.reserve(quartets.size());
  for (const auto& q : quartets) {
    out.emplace_back(mapped(map, q.pair1()[0]), mapped(map, q.pair1()[1]), mapped(map, q.pair2()[0]),
                     mapped(map, q.pair2()[1]));
  }
  return out;
}

LabelSet label_set(std::span<const Triplet> triplets) {
  std::vector<Label> all;
  all.reserve(triplets.size() * 3);
  for (const auto& t : triplets) {
    all.push_back(t.cherry()[0]);
    all.push_back(t.cherry()[1]);
    all.push_back(t.outgroup());
  }
  return make_label_set(std::move(all));
}

void require_distinct(std::span<const Triplet> triplets) { require_distinct_impl(triplets, "triplet"); }

std::vector<Triplet> relabel(std::span<const Triplet> triplets, const LabelMap& map) {
  std::vector<Triplet> out;
  out.reserve(triplets.size());
  for (const auto& t : triplets) {
    out.emplace_back(mapped(map, t.cherry()[0]), mapped(map, t.cherry()[1]), mapped(map, t.outgroup()));
  }
  return out;
}

Character::Character(std::vector<LabelSet> parts) {
  if (parts.empty()) throw std::invalid_argument("character needs at least one state");
  std::vector<Label> all;
  for (auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("character has an empty state");
    std::sort(part.begin(), part.end());
    if (std::adjacent_find(part.begin(), part.end()) != part.end()) {
      throw std::invalid_argument("label repeated inside a character state");
    }
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("character states overlap");
  }
  std::sort(parts.begin(), parts.end());
  parts_ = std::move(parts);
  universe_ = std::move(all);
}

std::size_t max_states(std::span<const Character> characters) {
  std::size_t r = 0;
  for (const auto& c : characters) r = std::max(r, c.state_count());
  return r;
}

}  // namespace phylocompat
