#include "phylocompat/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "phylocompat/errors.hpp"

namespace phylocompat {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits one line into tokens; `separators` become single-character tokens of their own.
std::vector<Token> tokenize(std::string_view line, std::string_view separators) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (separators.find(c) != std::string_view::npos) {
      out.push_back({std::string(1, c), i + 1});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             separators.find(line[i]) == std::string_view::npos) {
        ++i;
      }
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

// Calls `handle(tokens, line_number)` for every non-blank line with comments removed.
template <class Handle>
void for_each_line(std::string_view text, std::string_view separators, Handle&& handle) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, separators);
    if (!tokens.empty()) handle(tokens, line_no);
  }
}

Label label_token(const Token& token, std::size_t line, Taxa& taxa) {
  if (!is_valid_label_name(token.text)) {
    throw ParseError("invalid label '" + token.text + "'", line, token.column);
  }
  return taxa.intern(token.text);
}

void expect_shape(const std::vector<Token>& tokens, std::size_t line, std::size_t left, std::size_t right,
                  const char* what) {
  const std::string shape = std::string("expected ") + what;
  if (tokens.size() < left + 1 || tokens[left].text != "|") {
    const std::size_t col = tokens.size() > left ? tokens[left].column : tokens.back().column;
    throw ParseError(shape, line, col);
  }
  if (tokens.size() != left + 1 + right) {
    const std::size_t col = tokens.size() > left + 1 + right ? tokens[left + 1 + right].column : tokens.back().column;
    throw ParseError(shape, line, col);
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != left && tokens[i].text == "|") throw ParseError(shape, line, tokens[i].column);
  }
}

std::string join_sorted(std::vector<std::string> names, std::string_view sep) {
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out += sep;
    out += names[i];
  }
  return out;
}

template <class T>
std::string format_all(std::span<const T> items, const Taxa& taxa, std::string (*one)(const T&, const Taxa&)) {
  std::string out;
  for (const auto& item : items) {
    out += one(item, taxa);
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<Quartet> parse_quartets(std::string_view text, Taxa& taxa) {
  std::vector<Quartet> out;
  for_each_line(text, "|", [&](const std::vector<Token>& tokens, std::size_t line) {
    expect_shape(tokens, line, 2, 2, "'a b | c d'");
    const Label a = label_token(tokens[0], line, taxa);
    const Label b = label_token(tokens[1], line, taxa);
    const Label c = label_token(tokens[3], line, taxa);
    const Label d = label_token(tokens[4], line, taxa);
    if (a == b || a == c || a == d || b == c || b == d || c == d) {
      throw ParseError("quartet needs four distinct labels", line, tokens[0].column);
    }
    out.emplace_back(a, b, c, d);
  });
  return out;
}

std::vector<Triplet> parse_triplets(std::string_view text, Taxa& taxa) {
  std::vector<Triplet> out;
  for_each_line(text, "|", [&](const std::vector<Token>& tokens, std::size_t line) {
    expect_shape(tokens, line, 2, 1, "'a b | c'");
    const Label a = label_token(tokens[0], line, taxa);
    const Label b = label_token(tokens[1], line, taxa);
    const Label c = label_token(tokens[3], line, taxa);
    if (a == b || a == c || b == c) throw ParseError("triplet needs three distinct labels", line, tokens[0].column);
    out.emplace_back(a, b, c);
  });
  return out;
}

std::vector<Character> parse_characters(std::string_view text, Taxa& taxa) {
  std::vector<Character> out;
  for_each_line(text, "|,", [&](const std::vector<Token>& tokens, std::size_t line) {
    std::vector<LabelSet> parts(1);
    bool need_label = true;
    for (const auto& token : tokens) {
      if (token.text == "|" || token.text == ",") {
        if (need_label) throw ParseError("expected a label", line, token.column);
        if (token.text == "|") parts.emplace_back();
        need_label = true;
      } else {
        if (!need_label) throw ParseError("expected ',' or '|'", line, token.column);
        parts.back().push_back(label_token(token, line, taxa));
        need_label = false;
      }
    }
    if (need_label) throw ParseError("expected a label", line, tokens.back().column + tokens.back().text.size());
    try {
      out.emplace_back(std::move(parts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line, tokens.front().column);
    }
  });
  return out;
}

std::string format_quartet(const Quartet& q, const Taxa& taxa) {
  std::string x = join_sorted({taxa.name(q.pair1()[0]), taxa.name(q.pair1()[1])}, " ");
  std::string y = join_sorted({taxa.name(q.pair2()[0]), taxa.name(q.pair2()[1])}, " ");
  if (y < x) std::swap(x, y);
  return x + " | " + y;
}

std::string format_triplet(const Triplet& t, const Taxa& taxa) {
  return join_sorted({taxa.name(t.cherry()[0]), taxa.name(t.cherry()[1])}, " ") + " | " + taxa.name(t.outgroup());
}

std::string format_character(const Character& c, const Taxa& taxa) {
  std::vector<std::vector<std::string>> parts;
  for (const auto& part : c.parts()) {
    std::vector<std::string> names;
    for (Label l : part) names.push_back(taxa.name(l));
    std::sort(names.begin(), names.end());
    parts.push_back(std::move(names));
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x < y;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += '|';
    out += join_sorted(parts[i], ",");
  }
  return out;
}

std::string format_lines(std::span<const Quartet> quartets, const Taxa& taxa) {
  return format_all(quartets, taxa, &format_quartet);
}

std::string format_lines(std::span<const Triplet> triplets, const Taxa& taxa) {
  return format_all(triplets, taxa, &format_triplet);
}

std::string format_lines(std::span<const Character> characters, const Taxa& taxa) {
  return format_all(characters, taxa, &format_character);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace phylocompat
