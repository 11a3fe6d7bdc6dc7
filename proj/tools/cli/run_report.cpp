#include "cli/run_report.hpp"

#include <algorithm>
#include <cstdio>

namespace phylocompat::cli {

std::optional<std::string> RunReport::find(std::string_view key) const {
  auto it = std::find_if(fields_.begin(), fields_.end(), [&](const auto& f) { return f.first == key; });
  if (it == fields_.end()) return std::nullopt;
  return it->second;
}

std::string RunReport::render(ReportFormat format, bool deterministic) const {
  std::string out;
  auto line = [&](std::string_view key, std::string_view value) {
    out += key;
    out += format == ReportFormat::key_value ? "=" : ": ";
    out += value;
    out += '\n';
  };
  line("command", command_);
  std::size_t width = 0;
  for (const auto& [key, value] : fields_) width = std::max(width, key.size());
  for (const auto& [key, value] : fields_) {
    if (format == ReportFormat::text) {
      out += key;
      out += ':';
      out.append(width - key.size() + 1, ' ');
      out += value;
      out += '\n';
    } else {
      line(key, value);
    }
  }
  if (seconds_ && !deterministic) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *seconds_);
    line("seconds", buf);
  }
  return out;
}

}  // namespace phylocompat::cli
