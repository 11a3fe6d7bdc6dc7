#include "phylocompat/newick.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centroid.hpp"
#include "phylocompat/errors.hpp"

namespace phylocompat {

namespace {

bool is_delimiter(char c) {
  return c == '(' || c == ')' || c == ',' || c == ';' || c == ':' || std::isspace(static_cast<unsigned char>(c));
}

class NewickParser {
 public:
  NewickParser(std::string_view text, Taxa& taxa) : text_(text), taxa_(taxa) {}

  RootedTree parse() {
    skip_space();
    if (at_end() || peek() == ';') fail("empty tree");
    const Vertex root = subtree();
    skip_space();
    if (at_end()) fail("missing terminating ';'");
    if (peek() != ';') fail(std::string("unexpected '") + peek() + "'");
    ++pos_;
    skip_space();
    if (!at_end()) fail("trailing characters after ';'");
    return builder_.build_rooted(root);
  }

 private:
  Vertex subtree() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    if (peek() == '(') {
      ++pos_;
      const Vertex v = builder_.add_vertex();
      for (;;) {
        builder_.add_edge(v, subtree());
        skip_space();
        if (at_end()) fail("unbalanced '('");
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      skip_space();
      if (!at_end() && peek() == ':') fail("branch lengths are not supported");
      if (!at_end() && !is_delimiter(peek())) fail("internal node names are not supported");
      return v;
    }
    return leaf();
  }

  Vertex leaf() {
    const std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) ++pos_;
    if (pos_ == start) fail("expected a leaf name or '('");
    const std::string_view name = text_.substr(start, pos_ - start);
    if (!is_valid_label_name(name)) fail("invalid leaf name '" + std::string(name) + "'", start);
    if (!seen_.emplace(name).second) fail("duplicate leaf name '" + std::string(name) + "'", start);
    if (!at_end() && peek() == ':') fail("branch lengths are not supported");
    return builder_.add_leaf(taxa_.intern(name));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  Taxa& taxa_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
  std::set<std::string, std::less<>> seen_;
};

// Writes the subtree hanging from `v` away from `from`, ordering children by the smallest
// leaf name beneath them.
class NewickWriter {
 public:
  NewickWriter(const detail::TreeCore& tree, const Taxa& taxa) : tree_(tree), taxa_(taxa) {}

  std::string subtree(Vertex v, std::optional<Vertex> from) const {
    if (auto label = tree_.label(v)) return taxa_.name(*label);
    std::vector<std::pair<std::string, std::string>> parts;
    for (Vertex w : tree_.neighbors(v)) {
      if (from && w == *from) continue;
      parts.emplace_back(min_name(w, v), subtree(w, v));
    }
    return join(std::move(parts));
  }

  std::string min_name(Vertex v, std::optional<Vertex> from) const {
    if (auto label = tree_.label(v)) return taxa_.name(*label);
    std::string best;
    bool first = true;
    for (Vertex w : tree_.neighbors(v)) {
      if (from && w == *from) continue;
      std::string candidate = min_name(w, v);
      if (first || candidate < best) best = std::move(candidate);
      first = false;
    }
    return best;
  }

  static std::string join(std::vector<std::pair<std::string, std::string>> parts) {
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += parts[i].second;
    }
    return out + ")";
  }

 private:
  const detail::TreeCore& tree_;
  const Taxa& taxa_;
};

}  // namespace

RootedTree parse_newick(std::string_view text, Taxa& taxa) { return NewickParser(text, taxa).parse(); }

std::string serialize_newick(const RootedTree& tree, const Taxa& taxa) {
  return NewickWriter(tree, taxa).subtree(tree.root(), std::nullopt) + ";";
}

std::string serialize_newick(const UnrootedTree& tree, const Taxa& taxa) {
  NewickWriter writer(tree, taxa);
  const auto centre = detail::centroids(tree);
  if (centre.size() == 1) return writer.subtree(centre[0], std::nullopt) + ";";
  const Vertex a = centre[0];
  const Vertex b = centre[1];
  return NewickWriter::join({{writer.min_name(a, b), writer.subtree(a, b)},
                             {writer.min_name(b, a), writer.subtree(b, a)}}) +
         ";";
}

}  // namespace phylocompat
