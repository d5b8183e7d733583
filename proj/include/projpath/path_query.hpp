// Shortest-path queries answered by predecessor backtracking over refined
// rows: single-source, single-destination, single-pair and all-pairs forms,
// plus the shortest-path matrix and its CSV format.
#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "projpath/graph.hpp"
#include "projpath/graph_io.hpp"
#include "projpath/refined.hpp"

namespace projpath {

/// A shortest path as its vertex sequence, source first.
using path = std::vector<vertex>;

/// All shortest paths between one pair, lexicographically ordered.
struct path_set {
  vertex source{};
  vertex target{};
  std::vector<path> paths;

  friend bool operator==(const path_set&, const path_set&) = default;
};

/// The number of tied shortest paths can be exponential; enumeration stops
/// past this many paths unless the caller raises the budget.
inline constexpr std::size_t k_default_path_budget = 100'000;

/// Expands every predecessor choice from the target back to the source.
/// Empty for an unreachable target; the single zero-length path for the
/// source itself.
inline path_set reconstruct_all(const predecessor_row& row, vertex v,
                                std::size_t path_budget = k_default_path_budget) {
  path_set out;
  out.source = row.source;
  out.target = v;
  if (!row.reachable(v)) return out;
  path suffix{v};  // target back towards the source
  auto rec = [&](auto&& self, vertex at) -> void {
    if (at == row.source) {
      if (out.paths.size() >= path_budget)
        throw error(errc::path_budget_exceeded,
                    "path budget of " + std::to_string(path_budget) +
                        " exceeded for pair (" + std::to_string(row.source) +
                        ", " + std::to_string(v) + ")");
      out.paths.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (vertex p : row.preds_of(at)) {
      suffix.push_back(p);
      self(self, p);
      suffix.pop_back();
    }
  };
  rec(rec, v);
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

/// Deterministic single answer: backtracks choosing the smallest-labeled
/// predecessor at every step, one predecessor lookup per step. The lookup
/// count (== the target's distance) is reported through lookup_count when
/// provided.
inline path reconstruct_one(const predecessor_row& row, vertex v,
                            std::size_t* lookup_count = nullptr) {
  if (lookup_count) *lookup_count = 0;
  if (!row.reachable(v))
    throw error(errc::no_path, "no path from " + std::to_string(row.source) +
                                   " to " + std::to_string(v));
  path rev{v};
  vertex at = v;
  while (at != row.source) {
    const auto& set = row.preds_of(at);
    if (lookup_count) ++*lookup_count;
    at = set.front();  // ascending, so front is the smallest label
    rev.push_back(at);
  }
  return path(rev.rbegin(), rev.rend());
}

/// Single-source shortest paths: the refined row itself.
inline predecessor_row sssp(const mixed_graph& g, vertex u) {
  return build_refined(g, u);
}

/// Single-destination shortest paths: the refined row over the reverse
/// adjacency. Reconstructing towards a source and reversing gives the
/// shortest source->v paths of the original graph.
inline predecessor_row sdsp(const mixed_graph& g, vertex v) {
  return build_refined(g.transposed(), v);
}

/// Single-pair query. The level loop stops after completing the level at
/// which the target first appears, so all tied predecessors are kept.
inline path_set spsp(const mixed_graph& g, vertex u, vertex v,
                     std::size_t path_budget = k_default_path_budget) {
  g.check_vertex(v);
  const predecessor_row row = detail::build_refined_impl(g, u, v, false);
  return reconstruct_all(row, v, path_budget);
}

/// n x n grid of predecessor sets; row i is the refined row from source i.
struct shortest_path_matrix {
  std::vector<predecessor_row> rows;

  int order() const noexcept { return static_cast<int>(rows.size()); }

  const predecessor_row& row(vertex u) const {
    if (u < 1 || u > order())
      throw error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(u) + " outside 1.." +
                      std::to_string(order()));
    return rows[static_cast<std::size_t>(u - 1)];
  }

  friend bool operator==(const shortest_path_matrix&,
                         const shortest_path_matrix&) = default;
};

/// All-pairs shortest paths: n independent refined builds. Rows share no
/// state and may be computed concurrently by callers slicing the source
/// range; this entry point runs them in source order.
inline shortest_path_matrix apsp(const mixed_graph& g) {
  shortest_path_matrix spm;
  spm.rows.reserve(static_cast<std::size_t>(g.order()));
  for (vertex u = 1; u <= g.order(); ++u) spm.rows.push_back(build_refined(g, u));
  return spm;
}

/// CSV form: a header of column labels, then one row per source with cells
/// '#' (diagonal), '-' (unreachable) or '|'-joined predecessor labels.
inline std::string spm_to_csv(const shortest_path_matrix& spm) {
  std::string out = "source";
  const int n = spm.order();
  for (vertex v = 1; v <= n; ++v) out += "," + std::to_string(v);
  out += '\n';
  for (vertex u = 1; u <= n; ++u) {
    const predecessor_row& row = spm.row(u);
    out += std::to_string(u);
    for (vertex v = 1; v <= n; ++v) {
      out += ',';
      if (v == u) {
        out += '#';
      } else if (!row.reachable(v)) {
        out += '-';
      } else {
        const auto& set = row.preds_of(v);
        for (std::size_t i = 0; i < set.size(); ++i) {
          if (i) out += '|';
          out += std::to_string(set[i]);
        }
      }
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace detail

/// Parses the CSV form back into a matrix. Distances are rebuilt from the
/// predecessor structure by expanding successors level by level from each
/// source.
inline shortest_path_matrix spm_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw error(errc::bad_format, "spm csv: empty input");
  const auto header = detail::split(line, ',');
  if (header.empty() || header[0] != "source")
    throw error(errc::bad_format, "spm csv: bad header");
  const int n = static_cast<int>(header.size()) - 1;
  for (int j = 1; j <= n; ++j)
    if (header[j] != std::to_string(j))
      throw error(errc::bad_format, "spm csv: bad column label '" + header[j] +
                                        "'");
  shortest_path_matrix spm;
  for (vertex u = 1; u <= n; ++u) {
    if (!std::getline(in, line))
      throw error(errc::bad_format,
                  "spm csv: missing row " + std::to_string(u));
    const auto cells = detail::split(line, ',');
    if (static_cast<int>(cells.size()) != n + 1 || cells[0] != std::to_string(u))
      throw error(errc::bad_format, "spm csv: bad row " + std::to_string(u));
    predecessor_row row;
    row.source = u;
    row.preds.assign(static_cast<std::size_t>(n), {});
    row.dist.assign(static_cast<std::size_t>(n), k_unreachable);
    for (vertex v = 1; v <= n; ++v) {
      const std::string& cell = cells[v];
      if (v == u) {
        if (cell != "#")
          throw error(errc::bad_format, "spm csv: diagonal cell (" +
                                            std::to_string(u) + ") must be '#'");
        continue;
      }
      if (cell == "-") continue;
      for (const std::string& tok : detail::split(cell, '|')) {
        const auto p = detail::parse_int(tok);
        if (!p || *p < 1 || *p > n)
          throw error(errc::bad_token, "spm csv: bad predecessor '" + tok +
                                           "' in row " + std::to_string(u));
        row.preds[v - 1].push_back(*p);
      }
      std::sort(row.preds[v - 1].begin(), row.preds[v - 1].end());
    }
    // rebuild distances by walking the successor relation from the source
    std::vector<std::vector<vertex>> successors(static_cast<std::size_t>(n) + 1);
    for (vertex j = 1; j <= n; ++j)
      for (vertex p : row.preds[j - 1]) successors[p].push_back(j);
    row.dist[u - 1] = 0;
    std::vector<vertex> frontier{u};
    int level = 0;
    while (!frontier.empty()) {
      ++level;
      std::vector<vertex> next;
      for (vertex x : frontier)
        for (vertex y : successors[x])
          if (row.dist[y - 1] == k_unreachable) {
            row.dist[y - 1] = level;
            next.push_back(y);
          }
      frontier.swap(next);
    }
    for (vertex v = 1; v <= n; ++v) {
      if (v != u && !row.preds[v - 1].empty() && row.dist[v - 1] == k_unreachable)
        throw error(errc::bad_format,
                    "spm csv: predecessors of " + std::to_string(v) +
                        " in row " + std::to_string(u) +
                        " do not connect back to the source");
      if (row.dist[v - 1] != k_unreachable) row.reached.push_back(v);
    }
    spm.rows.push_back(std::move(row));
  }
  if (std::getline(in, line) && !line.empty())
    throw error(errc::bad_format, "spm csv: trailing input");
  return spm;
}

/// Path text form: one path per line, vertices space-separated, lines in
/// the set's (lexicographic) order.
inline std::string format_paths(const path_set& ps) {
  std::string out;
  for (const path& p : ps.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace projpath
