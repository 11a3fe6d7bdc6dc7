#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phylocompat {

/// Dense integer handle for a taxon name inside one `Taxa` universe.
enum class Label : std::uint32_t {};

constexpr std::uint32_t index_of(Label label) noexcept { return static_cast<std::uint32_t>(label); }

/// Sorted, duplicate-free sequence of labels.
using LabelSet = std::vector<Label>;

LabelSet make_label_set(std::vector<Label> labels);
bool is_subset(std::span<const Label> sub, std::span<const Label> super);

/// Characters that may not appear in a label name (plus any whitespace).
inline constexpr std::string_view kReservedLabelChars = "(){},;|:";

bool is_valid_label_name(std::string_view name) noexcept;

/// Name <-> id bijection. Ids are handed out densely in first-seen order.
class Taxa {
 public:
  /// Returns the existing id for `name` or allocates the next one.
  /// Throws std::invalid_argument for names that are empty or contain reserved characters.
  Label intern(std::string_view name);

  std::optional<Label> find(std::string_view name) const;
  /// Throws std::invalid_argument when the name is unknown.
  Label at(std::string_view name) const;

  const std::string& name(Label label) const;
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Label, std::less<>> ids_;
};

/// Label bijection (used for relabelling whole constraint sets).
using LabelMap = std::map<Label, Label>;

}  // namespace phylocompat
