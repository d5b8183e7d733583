// Refined projections: the level-by-level single-row build that keeps only
// shortest paths, pruning of full projections down to minimal-level vertex
// instances, and the eccentricity metrics derived from the row distances.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "projpath/graph.hpp"
#include "projpath/projection.hpp"

namespace projpath {

inline constexpr int k_unreachable = -1;

/// Single-row refined projection from a source vertex: for every vertex j,
/// the set of immediate predecessors on shortest source->j paths and the
/// distance in levels. Encodes all shortest paths from the source.
struct predecessor_row {
  vertex source{};
  std::vector<std::vector<vertex>> preds;  // index v-1; each set ascending
  std::vector<int> dist;                   // index v-1; k_unreachable if none
  std::vector<vertex> reached;             // settled set, ascending

  int order() const noexcept { return static_cast<int>(dist.size()); }

  bool reachable(vertex v) const { return dist_of(v) != k_unreachable; }

  const std::vector<vertex>& preds_of(vertex v) const {
    check(v);
    return preds[static_cast<std::size_t>(v - 1)];
  }

  int dist_of(vertex v) const {
    check(v);
    return dist[static_cast<std::size_t>(v - 1)];
  }

  friend bool operator==(const predecessor_row&,
                         const predecessor_row&) = default;

 private:
  void check(vertex v) const {
    if (v < 1 || v > order())
      throw error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(order()));
  }
};

namespace detail {

/// Level loop shared by the full build and the early-stopping pair query.
/// Levels are generated from the blocked-column mask alone; with
/// verify_forbidden_sets the per-path forbidden sets are additionally
/// enumerated and checked to be subsumed by the blocked set.
inline predecessor_row build_refined_impl(const mixed_graph& g, vertex u,
                                          vertex stop_at,
                                          bool verify_forbidden_sets) {
  g.check_vertex(u);
  if (stop_at != 0) g.check_vertex(stop_at);
  const int n = g.order();
  predecessor_row row;
  row.source = u;
  row.preds.assign(static_cast<std::size_t>(n), {});
  row.dist.assign(static_cast<std::size_t>(n), k_unreachable);
  row.dist[u - 1] = 0;

  std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
  blocked[u] = 1;
  std::vector<vertex> frontier;
  for (vertex y = 1; y <= n; ++y) {
    if (!g.has(u, y)) continue;
    row.preds[y - 1].push_back(u);
    row.dist[y - 1] = 1;
    blocked[y] = 1;
    frontier.push_back(y);
  }
  int settled = 1 + static_cast<int>(frontier.size());

  // all root paths to x, walked backwards over the predecessor sets
  auto paths_to = [&](vertex x) {
    std::vector<std::vector<vertex>> paths;
    std::vector<vertex> cur{x};
    auto rec = [&](auto&& self, vertex at) -> void {
      if (at == u) {
        paths.emplace_back(cur.rbegin(), cur.rend());
        return;
      }
      for (vertex p : row.preds[at - 1]) {
        cur.push_back(p);
        self(self, p);
        cur.pop_back();
      }
    };
    rec(rec, x);
    return paths;
  };

  int level = 1;
  while (!frontier.empty() && settled < n &&
         !(stop_at != 0 && row.dist[stop_at - 1] != k_unreachable)) {
    ++level;
    std::vector<vertex> next;
    for (vertex x : frontier) {
      std::vector<char> generated(static_cast<std::size_t>(n) + 1, 0);
      if (verify_forbidden_sets) {
        for (const auto& path : paths_to(x)) {
          for (vertex w : path)
            if (w != x && !blocked[w])
              throw std::logic_error(
                  "forbidden-set invariant violated: root-path vertex " +
                  std::to_string(w) + " not settled before level " +
                  std::to_string(level));
          std::vector<char> in_path(static_cast<std::size_t>(n) + 1, 0);
          for (vertex w : path) in_path[w] = 1;
          for (vertex y = 1; y <= n; ++y)
            if (g.has(x, y) && !blocked[y] && !in_path[y]) generated[y] = 1;
        }
      } else {
        for (vertex y = 1; y <= n; ++y)
          if (g.has(x, y) && !blocked[y]) generated[y] = 1;
      }
      for (vertex y = 1; y <= n; ++y) {
        if (!generated[y]) continue;
        if (row.dist[y - 1] != level) {
          row.dist[y - 1] = level;
          next.push_back(y);
        }
        row.preds[y - 1].push_back(x);
      }
    }
    std::sort(next.begin(), next.end());
    for (vertex y : next) blocked[y] = 1;
    settled += static_cast<int>(next.size());
    frontier.swap(next);
  }

  for (vertex v = 1; v <= n; ++v)
    if (row.dist[v - 1] != k_unreachable) row.reached.push_back(v);
  return row;
}

}  // namespace detail

/// Builds the refined projection row from the source: level 1 is the
/// source's neighborhood, and each further level is generated from the
/// previous one with all settled columns blocked, so every vertex is
/// recorded exactly at its distance with all tied predecessors kept. The
/// build stops when all vertices are settled or a level comes up empty
/// (the remainder is unreachable).
inline predecessor_row build_refined(const mixed_graph& g, vertex u,
                                     bool verify_forbidden_sets = false) {
  return detail::build_refined_impl(g, u, 0, verify_forbidden_sets);
}

/// Keeps only the instances of each vertex at its minimal level and drops
/// the subtrees under every other instance, leaving exactly the shortest
/// paths from the base. Ties at the minimal level are all retained.
inline projection refine_projection(const projection& p, const mixed_graph& g) {
  g.check_vertex(p.base);
  std::vector<int> min_level;
  auto scan = [&](auto&& self, const projection_node& node) -> void {
    if (node.v >= static_cast<int>(min_level.size()))
      min_level.resize(node.v + 1, -1);
    if (min_level[node.v] < 0 || node.level < min_level[node.v])
      min_level[node.v] = node.level;
    for (const projection_node& c : node.children) self(self, c);
  };
  scan(scan, p.root);

  projection refined;
  refined.base = p.base;
  refined.direction = p.direction;
  int max_level = 0;
  auto keep = [&](auto&& self, const projection_node& node) -> projection_node {
    projection_node out{node.v, node.level, node.exhausted, {}};
    max_level = std::max(max_level, node.level);
    for (const projection_node& c : node.children)
      if (c.level == min_level[c.v]) out.children.push_back(self(self, c));
    return out;
  };
  refined.root = keep(keep, p.root);
  refined.depth = max_level;
  return refined;
}

/// Collapses a refined projection into its row form: every parent->child
/// link becomes a predecessor entry. Rejects trees where some vertex
/// occurs on two different levels (i.e. not refined).
inline predecessor_row row_from_refined(const projection& p,
                                        const mixed_graph& g) {
  const int n = g.order();
  predecessor_row row;
  row.source = p.base;
  row.preds.assign(static_cast<std::size_t>(n), {});
  row.dist.assign(static_cast<std::size_t>(n), k_unreachable);
  auto walk = [&](auto&& self, const projection_node& node) -> void {
    g.check_vertex(node.v);
    if (row.dist[node.v - 1] != k_unreachable &&
        row.dist[node.v - 1] != node.level)
      throw std::invalid_argument(
          "row_from_refined: vertex " + std::to_string(node.v) +
          " appears on two levels; projection is not refined");
    row.dist[node.v - 1] = node.level;
    for (const projection_node& c : node.children) {
      self(self, c);
      auto& set = row.preds[c.v - 1];
      if (std::find(set.begin(), set.end(), node.v) == set.end())
        set.push_back(node.v);
    }
  };
  walk(walk, p.root);
  if (row.dist[p.base - 1] != 0)
    throw std::invalid_argument("row_from_refined: base is not at level 0");
  for (auto& set : row.preds) std::sort(set.begin(), set.end());
  for (vertex v = 1; v <= n; ++v)
    if (row.dist[v - 1] != k_unreachable) row.reached.push_back(v);
  return row;
}

/// Expands a row back into the refined projection tree over the graph the
/// row was built on: the children of a node are the vertices it precedes.
inline projection refined_from_row(const predecessor_row& row,
                                   const mixed_graph& g) {
  const int n = g.order();
  if (row.order() != n)
    throw std::invalid_argument("refined_from_row: row order mismatch");
  std::vector<std::vector<vertex>> successors(static_cast<std::size_t>(n) + 1);
  for (vertex j = 1; j <= n; ++j) {
    for (vertex p : row.preds_of(j)) {
      if (!g.has(p, j))
        throw std::invalid_argument(
            "refined_from_row: predecessor " + std::to_string(p) + " of " +
            std::to_string(j) + " is not adjacent in the graph");
      successors[p].push_back(j);
    }
  }
  for (auto& s : successors) std::sort(s.begin(), s.end());
  projection p;
  p.base = row.source;
  p.direction = projection_direction::direct;
  int max_level = 0;
  auto build = [&](auto&& self, vertex v, int level) -> projection_node {
    projection_node node{v, level, false, {}};
    max_level = std::max(max_level, level);
    for (vertex c : successors[v]) node.children.push_back(self(self, c, level + 1));
    return node;
  };
  p.root = build(build, row.source, 0);
  p.depth = max_level;
  return p;
}

/// Maximal finite distance plus the set of vertices that are not reachable
/// at all; the metric is bounded only when that set is empty.
struct eccentricity_result {
  int value = 0;
  std::vector<vertex> unreachable;

  bool bounded() const noexcept { return unreachable.empty(); }

  friend bool operator==(const eccentricity_result&,
                         const eccentricity_result&) = default;
};

inline eccentricity_result eccentricity(const mixed_graph& g, vertex u) {
  const predecessor_row row = build_refined(g, u);
  eccentricity_result r;
  for (vertex v = 1; v <= g.order(); ++v) {
    const int d = row.dist_of(v);
    if (d == k_unreachable)
      r.unreachable.push_back(v);
    else
      r.value = std::max(r.value, d);
  }
  return r;
}

/// Largest distance *to* u from the rest of the graph.
inline eccentricity_result inverse_eccentricity(const mixed_graph& g,
                                                vertex u) {
  return eccentricity(g.transposed(), u);
}

namespace detail {

template <typename PerSource>
eccentricity_result max_over_sources(const mixed_graph& g, PerSource per) {
  eccentricity_result out;
  for (vertex u = 1; u <= g.order(); ++u) {
    const eccentricity_result e = per(u);
    out.value = std::max(out.value, e.value);
    for (vertex v : e.unreachable)
      if (std::find(out.unreachable.begin(), out.unreachable.end(), v) ==
          out.unreachable.end())
        out.unreachable.push_back(v);
  }
  std::sort(out.unreachable.begin(), out.unreachable.end());
  return out;
}

}  // namespace detail

inline eccentricity_result diameter(const mixed_graph& g) {
  return detail::max_over_sources(
      g, [&](vertex u) { return eccentricity(g, u); });
}

inline eccentricity_result inverse_diameter(const mixed_graph& g) {
  const mixed_graph t = g.transposed();
  return detail::max_over_sources(
      t, [&](vertex u) { return eccentricity(t, u); });
}

/// Row text form: "u: c_1 c_2 ... c_n" with '#' for the source, '-' for an
/// unreachable vertex and '|'-joined ascending predecessor labels
/// otherwise.
inline std::string format_row(const predecessor_row& row) {
  std::string out = std::to_string(row.source) + ":";
  for (vertex v = 1; v <= row.order(); ++v) {
    out += ' ';
    if (v == row.source) {
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
  return out;
}

}  // namespace projpath
