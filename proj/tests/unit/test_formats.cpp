#include <doctest.h>

#include <filesystem>

#include "oracles.hpp"
#include "phylocompat/errors.hpp"
#include "phylocompat/formats.hpp"

using namespace phylocompat;

namespace {

std::pair<std::size_t, std::size_t> error_at(void (*parse)(std::string_view), std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

void quartets(std::string_view text) {
  Taxa taxa;
  parse_quartets(text, taxa);
}
void triplets(std::string_view text) {
  Taxa taxa;
  parse_triplets(text, taxa);
}
void characters(std::string_view text) {
  Taxa taxa;
  parse_characters(text, taxa);
}

using Pos = std::pair<std::size_t, std::size_t>;

}  // namespace

TEST_CASE("quartet lines") {
  Taxa taxa;
  const auto q = parse_quartets("# header\n\n  d c|b a  \nx1 x2 | x3 x4 # trailing\n", taxa);
  REQUIRE(q.size() == 2);
  CHECK(format_quartet(q[0], taxa) == "a b | c d");
  CHECK(format_lines(q, taxa) == "a b | c d\nx1 x2 | x3 x4\n");
  CHECK(parse_quartets("", taxa).empty());
  CHECK(error_at(quartets, "a b c d\n") == Pos{1, 5});
  CHECK(error_at(quartets, "a b | c d\na b | c\n") == Pos{2, 7});
  CHECK(error_at(quartets, "a b | c d e\n") == Pos{1, 11});
  CHECK(error_at(quartets, "a b | c | d\n") == Pos{1, 11});
  CHECK(error_at(quartets, "a a | c d\n") == Pos{1, 1});
  CHECK(error_at(quartets, "a b | c d;\n") == Pos{1, 9});
}

TEST_CASE("triplet lines") {
  Taxa taxa;
  const auto r = parse_triplets("b a | c\n# only a comment\ne d|f\n", taxa);
  REQUIRE(r.size() == 2);
  CHECK(format_lines(r, taxa) == "a b | c\nd e | f\n");
  CHECK(r[0].outgroup() == taxa.at("c"));
  CHECK(error_at(triplets, "a b | c d\n") == Pos{1, 9});
  CHECK(error_at(triplets, "a | b c\n") == Pos{1, 5});
  CHECK(error_at(triplets, "a b | a\n") == Pos{1, 1});
}

TEST_CASE("character lines") {
  Taxa taxa;
  const auto c = parse_characters("d|c, e | b,a|f\na,b,c,d,e,f\n", taxa);
  REQUIRE(c.size() == 2);
  CHECK(format_character(c[0], taxa) == "a,b|c,e|d|f");
  CHECK(c[0].state_count() == 4);
  CHECK(format_character(c[1], taxa) == "a,b,c,d,e,f");
  CHECK(error_at(characters, "a,,b\n") == Pos{1, 3});
  CHECK(error_at(characters, "a|b|\n") == Pos{1, 5});
  CHECK(error_at(characters, "a b|c\n") == Pos{1, 3});
  CHECK(error_at(characters, "a,b|b\n") == Pos{1, 1});
  CHECK(error_at(characters, "|a\n") == Pos{1, 1});
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "phylocompat_formats_test.txt";
  write_text_file(path, "a b | c d\n");
  CHECK(read_text_file(path) == "a b | c d\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file(path), std::runtime_error);
}
