// Bracket text form of projections.
//
// Grammar:  proj := node
//           node := INT [ '(' ( node (',' node)* | '0' ) ')' ]
// Labels are >= 1; '0' marks a node whose child generation came up empty
// below the depth bound; whitespace (including newlines) is ignored.
// Canonical output lists children in ascending vertex order.
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "projpath/projection.hpp"

namespace projpath {

namespace detail {

inline void bracket_of(const projection_node& node, std::string& out) {
  out += std::to_string(node.v);
  if (!node.children.empty()) {
    std::vector<const projection_node*> kids;
    kids.reserve(node.children.size());
    for (const projection_node& c : node.children) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(),
              [](const projection_node* a, const projection_node* b) {
                return a->v < b->v;
              });
    out += '(';
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      bracket_of(*kids[i], out);
    }
    out += ')';
  } else if (node.exhausted) {
    out += "(0)";
  }
}

class bracket_parser {
 public:
  explicit bracket_parser(std::string_view text) : text_(text) {}

  projection parse() {
    projection p;
    std::vector<char> on_path;
    p.root = parse_node(0, on_path);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after projection");
    p.base = p.root.v;
    p.depth = 0;
    measure_depth(p.root, p.depth);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw error(errc::syntax_error, "bracket syntax error at position " +
                                        std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int parse_label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected vertex label");
    long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000'000) fail("vertex label too large");
    }
    return static_cast<int>(value);
  }

  projection_node parse_node(int level, std::vector<char>& on_path) {
    const std::size_t label_pos = pos_;
    const int label = parse_label();
    if (label < 1) {
      pos_ = label_pos;
      fail("vertex labels start at 1");
    }
    if (static_cast<std::size_t>(label) >= on_path.size())
      on_path.resize(label + 1, 0);
    if (on_path[label])
      throw error(errc::repeat_on_path,
                  "vertex " + std::to_string(label) +
                      " repeats on its own root path (position " +
                      std::to_string(label_pos) + ")");
    projection_node node{label, level, false, {}};
    if (eat('(')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '0') {
        ++pos_;
        node.exhausted = true;
        if (!eat(')')) fail("expected ')' after empty-generation marker");
        return node;
      }
      on_path[label] = 1;
      do {
        node.children.push_back(parse_node(level + 1, on_path));
      } while (eat(','));
      if (!eat(')')) fail("expected ')' or ','");
      on_path[label] = 0;
      for (std::size_t i = 0; i < node.children.size(); ++i)
        for (std::size_t j = i + 1; j < node.children.size(); ++j)
          if (node.children[i].v == node.children[j].v)
            throw error(errc::duplicate_sibling,
                        "duplicate sibling vertex " +
                            std::to_string(node.children[i].v));
    }
    return node;
  }

  static void measure_depth(const projection_node& node, int& depth) {
    depth = std::max(depth, node.exhausted ? node.level + 1 : node.level);
    for (const projection_node& c : node.children) measure_depth(c, depth);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Canonical bracket text of a projection. A node at a level below the
/// depth bound whose generation came up empty renders as "label(0)"; leaf
/// nodes at the depth bound render bare.
inline std::string to_bracket(const projection& p) {
  std::string out;
  detail::bracket_of(p.root, out);
  return out;
}

/// Parses bracket text into a structure-only projection (no backing
/// graph). Levels follow nesting depth; the depth bound is the deepest
/// level present, extended one past any exhausted node.
inline projection parse_bracket(std::string_view text) {
  return detail::bracket_parser(text).parse();
}

}  // namespace projpath
