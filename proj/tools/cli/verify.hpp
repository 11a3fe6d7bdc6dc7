#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phylocompat::cli {

/// Range knobs shared by all suites; unset fields take the suite's default.
struct VerifyParams {
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> max;
  std::optional<std::size_t> r_max;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> max_labels;
  std::uint64_t seed = 1;
};

struct VerifyCase {
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::vector<VerifyCase> cases;

  bool passed() const;
};

/// Suite names accepted by run_verification, in documentation order.
const std::vector<std::string>& verify_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name and LimitExceeded when a
/// range parameter is beyond what the suite's oracles accept.
VerifyReport run_verification(std::string_view name, const VerifyParams& params);

}  // namespace phylocompat::cli
