// Text formats for mixed graphs: adjacency matrix and edge list.
//
// Matrix: n lines of n whitespace-separated tokens from {0, 1, #};
// '#' only on the diagonal. Edge list: header "n <count>", then one
// "u v" (edge) or "u > v" (arc) per line. '%' starts a comment line
// in both formats.
#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "projpath/graph.hpp"

namespace projpath {

enum class graph_format { matrix, edge_list };

namespace detail {

inline std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '%') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace detail

inline mixed_graph parse_adjacency_matrix(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty())
    throw error(errc::bad_format, "adjacency matrix: no matrix lines found");
  const int n = static_cast<int>(lines.size());
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    const auto toks = detail::tokens_of(lines[i]);
    if (static_cast<int>(toks.size()) != n)
      throw error(errc::non_square,
                  "adjacency matrix: row " + std::to_string(i + 1) + " has " +
                      std::to_string(toks.size()) + " tokens, expected " +
                      std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const std::string& t = toks[j];
      if (t == "#") {
        if (i != j)
          throw error(errc::bad_token,
                      "adjacency matrix: '#' off the diagonal at (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ")");
      } else if (t == "1") {
        if (i == j)
          throw error(errc::self_loop,
                      "adjacency matrix: self-loop at vertex " +
                          std::to_string(i + 1));
        cells[static_cast<std::size_t>(i) * n + j] = 1;
      } else if (t != "0") {
        throw error(errc::bad_token,
                    "adjacency matrix: bad token '" + t + "' at (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        ")");
      }
    }
  }
  return mixed_graph::from_cells(n, cells);
}

inline std::string format_adjacency_matrix(const mixed_graph& g) {
  std::string out;
  const int n = g.order();
  for (vertex u = 1; u <= n; ++u) {
    for (vertex v = 1; v <= n; ++v) {
      if (v > 1) out += ' ';
      out += u == v ? '#' : (g.has(u, v) ? '1' : '0');
    }
    out += '\n';
  }
  return out;
}

inline mixed_graph parse_edge_list(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty())
    throw error(errc::bad_format, "edge list: empty input");
  const auto header = detail::tokens_of(lines[0]);
  if (header.size() != 2 || header[0] != "n")
    throw error(errc::bad_format,
                "edge list: expected header \"n <count>\", got \"" + lines[0] +
                    "\"");
  const auto n = detail::parse_int(header[1]);
  if (!n || *n < 0)
    throw error(errc::bad_format,
                "edge list: bad vertex count '" + header[1] + "'");
  std::vector<edge_spec> items;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = detail::tokens_of(lines[i]);
    std::optional<int> u;
    std::optional<int> v;
    link_kind kind = link_kind::edge;
    if (toks.size() == 2) {
      u = detail::parse_int(toks[0]);
      v = detail::parse_int(toks[1]);
    } else if (toks.size() == 3 && toks[1] == ">") {
      u = detail::parse_int(toks[0]);
      v = detail::parse_int(toks[2]);
      kind = link_kind::arc;
    } else {
      throw error(errc::bad_format,
                  "edge list: expected \"u v\" or \"u > v\", got \"" +
                      lines[i] + "\"");
    }
    if (!u || !v)
      throw error(errc::bad_token,
                  "edge list: bad vertex label in \"" + lines[i] + "\"");
    items.push_back({*u, *v, kind});
  }
  return mixed_graph::from_edges(*n, items);
}

/// Canonical edge-list text: header, then one line per adjacent pair,
/// ordered by (min label, max label); arcs keep their own direction.
inline std::string format_edge_list(const mixed_graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  const int n = g.order();
  for (vertex u = 1; u <= n; ++u) {
    for (vertex v = u + 1; v <= n; ++v) {
      switch (g.classify(u, v)) {
        case pair_kind::edge:
          out += std::to_string(u) + " " + std::to_string(v) + "\n";
          break;
        case pair_kind::arc_forward:
          out += std::to_string(u) + " > " + std::to_string(v) + "\n";
          break;
        case pair_kind::arc_backward:
          out += std::to_string(v) + " > " + std::to_string(u) + "\n";
          break;
        case pair_kind::none:
          break;
      }
    }
  }
  return out;
}

/// Detects the format by the shape of the first non-comment line.
inline graph_format detect_format(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty())
    throw error(errc::bad_format, "cannot detect format of empty input");
  const auto toks = detail::tokens_of(lines[0]);
  if (!toks.empty() && toks[0] == "n") return graph_format::edge_list;
  return graph_format::matrix;
}

inline mixed_graph parse_graph(std::string_view text,
                               std::optional<graph_format> fmt = std::nullopt) {
  const graph_format f = fmt ? *fmt : detect_format(text);
  return f == graph_format::matrix ? parse_adjacency_matrix(text)
                                   : parse_edge_list(text);
}

}  // namespace projpath
