#include "phylocompat/labels.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace phylocompat {

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool is_subset(std::span<const Label> sub, std::span<const Label> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool is_valid_label_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (kReservedLabelChars.find(c) != std::string_view::npos) return false;
  }
  return true;
}

Label Taxa::intern(std::string_view name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  if (!is_valid_label_name(name)) {
    throw std::invalid_argument("invalid label name '" + std::string(name) + "'");
  }
  const Label id{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

std::optional<Label> Taxa::find(std::string_view name) const {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  return std::nullopt;
}

Label Taxa::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw std::invalid_argument("unknown label '" + std::string(name) + "'");
}

const std::string& Taxa::name(Label label) const {
  if (index_of(label) >= names_.size()) {
    throw std::out_of_range("label id " + std::to_string(index_of(label)) + " outside taxa");
  }
  return names_[index_of(label)];
}

}  // namespace phylocompat
