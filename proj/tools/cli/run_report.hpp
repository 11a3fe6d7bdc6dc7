#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phylocompat::cli {

enum class ReportFormat { key_value, text };

/// Ordered record of one command run. Keys may repeat (one line per certificate item).
class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void set_seconds(double seconds) { seconds_ = seconds; }

  const std::string& command() const noexcept { return command_; }
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }
  /// First value stored under `key`.
  std::optional<std::string> find(std::string_view key) const;

  /// With `deterministic` set the timing line is left out, so two runs on the same input
  /// render byte-identical text.
  std::string render(ReportFormat format, bool deterministic) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::optional<double> seconds_;
};

}  // namespace phylocompat::cli
