#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phylocompat/character.hpp"
#include "phylocompat/labels.hpp"
#include "phylocompat/quartet.hpp"
#include "phylocompat/triplet.hpp"

namespace phylocompat {

// Line formats, one item per line, '#' starts a comment, blank lines are skipped:
//   quartet    a b | c d
//   triplet    a b | c        (cherry, then outgroup)
//   character  a,b|c,e|d|f    (states separated by '|', labels by ',')
// Malformed lines raise ParseError with 1-based line and column.

std::vector<Quartet> parse_quartets(std::string_view text, Taxa& taxa);
std::vector<Triplet> parse_triplets(std::string_view text, Taxa& taxa);
std::vector<Character> parse_characters(std::string_view text, Taxa& taxa);

// Output sorts by name, not by label id, so files do not depend on interning order.
// Characters list larger states first.
std::string format_quartet(const Quartet& quartet, const Taxa& taxa);
std::string format_triplet(const Triplet& triplet, const Taxa& taxa);
std::string format_character(const Character& character, const Taxa& taxa);

/// One formatted line per item, each terminated by '\n', in input order.
std::string format_lines(std::span<const Quartet> quartets, const Taxa& taxa);
std::string format_lines(std::span<const Triplet> triplets, const Taxa& taxa);
std::string format_lines(std::span<const Character> characters, const Taxa& taxa);

/// Whole file as text; throws std::runtime_error if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace phylocompat
