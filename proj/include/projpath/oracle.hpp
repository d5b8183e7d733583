// Brute-force reference implementations, kept deliberately separate from the
// refined-search machinery: queue-based traversal for distances and an
// exhaustive depth-first enumeration for path sets. Exponential is fine here;
// these exist to check the fast path, not to be one.
#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "projpath/graph.hpp"
#include "projpath/path_query.hpp"
#include "projpath/refined.hpp"

namespace projpath::oracle {

/// Textbook queue-based traversal. Index v-1; k_unreachable where no walk
/// exists.
inline std::vector<int> bfs_distances(const mixed_graph& g, vertex u) {
  g.check_vertex(u);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), k_unreachable);
  dist[u - 1] = 0;
  std::queue<vertex> q;
  q.push(u);
  while (!q.empty()) {
    const vertex x = q.front();
    q.pop();
    for (vertex w : g.out_neighbors(x))
      if (dist[w - 1] == k_unreachable) {
        dist[w - 1] = dist[x - 1] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Distances plus the direct predecessor characterization
/// { p : adj[p][v] and dist[p] + 1 = dist[v] }.
struct oracle_result {
  std::vector<int> dist;                     // index v-1
  std::vector<std::vector<vertex>> pred_sets;  // index v-1, ascending
};

inline oracle_result characterize(const mixed_graph& g, vertex u) {
  oracle_result r;
  r.dist = bfs_distances(g, u);
  const int n = g.order();
  r.pred_sets.assign(static_cast<std::size_t>(n), {});
  for (vertex v = 1; v <= n; ++v) {
    if (v == u || r.dist[v - 1] == k_unreachable) continue;
    for (vertex p = 1; p <= n; ++p)
      if (g.has(p, v) && r.dist[p - 1] != k_unreachable &&
          r.dist[p - 1] + 1 == r.dist[v - 1])
        r.pred_sets[v - 1].push_back(p);
  }
  return r;
}

/// Depth-first enumeration of all simple paths of length at most d(u,v),
/// filtered to exact length, lexicographically sorted. Exponential; meant
/// for small graphs (n <= 12 or so).
inline std::vector<path> enumerate_shortest_paths(const mixed_graph& g,
                                                  vertex u, vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  const int d = bfs_distances(g, u)[v - 1];
  std::vector<path> out;
  if (d == k_unreachable) return out;
  path cur{u};
  std::vector<char> visited(static_cast<std::size_t>(g.order()) + 1, 0);
  visited[u] = 1;
  auto rec = [&](auto&& self, vertex x, int len) -> void {
    if (len == d) {
      if (x == v) out.push_back(cur);
      return;
    }
    for (vertex w : g.out_neighbors(x)) {
      if (visited[w]) continue;
      visited[w] = 1;
      cur.push_back(w);
      self(self, w, len + 1);
      cur.pop_back();
      visited[w] = 0;
    }
  };
  rec(rec, u, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Outcome of comparing library output against the oracle: success, or a
/// description of the first divergence found.
struct equivalence_report {
  bool ok = true;
  std::string divergence;

  static equivalence_report success() { return {}; }
  static equivalence_report fail(std::string what) {
    return {false, std::move(what)};
  }
  explicit operator bool() const noexcept { return ok; }
};

/// Checks an already-built predecessor row against the oracle
/// characterization — usable on corrupted rows for fault injection.
inline equivalence_report check_row(const mixed_graph& g,
                                    const predecessor_row& row) {
  const int n = g.order();
  if (row.order() != n)
    return equivalence_report::fail(
        "row order " + std::to_string(row.order()) + " != graph order " +
        std::to_string(n));
  const oracle_result ref = characterize(g, row.source);
  for (vertex v = 1; v <= n; ++v) {
    if (row.dist[v - 1] != ref.dist[v - 1])
      return equivalence_report::fail(
          "dist mismatch at vertex " + std::to_string(v) + " from source " +
          std::to_string(row.source) + ": row " +
          std::to_string(row.dist[v - 1]) + ", oracle " +
          std::to_string(ref.dist[v - 1]));
    if (v != row.source && row.preds[v - 1] != ref.pred_sets[v - 1])
      return equivalence_report::fail(
          "predecessor-set mismatch at vertex " + std::to_string(v) +
          " from source " + std::to_string(row.source));
  }
  return equivalence_report::success();
}

/// Full comparison for one source: distances and predecessor sets always,
/// and (optionally — it is exponential) path counts and exact path sets per
/// target.
inline equivalence_report assert_equivalence(const mixed_graph& g, vertex u,
                                             bool check_paths = true) {
  const predecessor_row row = build_refined(g, u);
  if (auto r = check_row(g, row); !r) return r;
  if (!check_paths) return equivalence_report::success();
  for (vertex v = 1; v <= g.order(); ++v) {
    const std::vector<path> expect = enumerate_shortest_paths(g, u, v);
    const path_set got = reconstruct_all(row, v);
    if (got.paths.size() != expect.size())
      return equivalence_report::fail(
          "path count mismatch for (" + std::to_string(u) + ", " +
          std::to_string(v) + "): library " +
          std::to_string(got.paths.size()) + ", oracle " +
          std::to_string(expect.size()));
    if (got.paths != expect)
      return equivalence_report::fail("path set mismatch for (" +
                                      std::to_string(u) + ", " +
                                      std::to_string(v) + ")");
  }
  return equivalence_report::success();
}

}  // namespace projpath::oracle
