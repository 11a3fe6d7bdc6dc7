#pragma once

#include <iosfwd>

namespace phylocompat::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitCompatible = 0;  // also plain success
inline constexpr int kExitIncompatible = 1;
inline constexpr int kExitError = 2;

/// Parses the command line and runs one subcommand (gen, check, verify, export-dot).
/// Usage and runtime errors are reported on `err` with exit code 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phylocompat::cli
