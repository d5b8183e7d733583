// Leveled projections of a mixed graph.
//
// The projection of a graph rooted at a base vertex u is a tree whose
// level-(i+1) children of a node x are the vertices adjacent from x minus
// every vertex already on the root path, so each root path is a simple
// path starting at u. The inverse projection uses the reverse adjacency,
// making u the destination of every root path.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "projpath/graph.hpp"

namespace projpath {

struct projection_node {
  vertex v{};
  int level = 0;
  /// True when child generation yielded the empty set below the depth
  /// bound (rendered "(0)" in bracket text).
  bool exhausted = false;
  std::vector<projection_node> children;  // ascending by vertex

  friend bool operator==(const projection_node&,
                         const projection_node&) = default;
};

enum class projection_direction { direct, inverse };

struct projection {
  vertex base{};
  int depth = 0;  // level bound k; nodes live on levels 0..depth
  projection_direction direction = projection_direction::direct;
  projection_node root;

  friend bool operator==(const projection&, const projection&) = default;
};

/// Depth request: build to the base's (inverse) eccentricity, which is the
/// minimum depth covering every reachable vertex.
inline constexpr int k_auto_depth = -1;

/// Full projections can grow exponentially; builds abort past this many
/// nodes unless the caller raises the budget.
inline constexpr std::size_t k_default_node_budget = 1'000'000;

namespace detail {

/// Max finite distance from u (or to u, when inverse) over the blocked-level
/// expansion; ignores unreachable vertices.
inline int reach_depth(const mixed_graph& g, vertex u, bool inverse) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  seen[u] = 1;
  std::vector<vertex> frontier{u};
  int level = 0;
  while (!frontier.empty()) {
    std::vector<vertex> next;
    for (vertex x : frontier) {
      for (vertex y = 1; y <= n; ++y) {
        const bool adj = inverse ? g.has(y, x) : g.has(x, y);
        if (adj && !seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    }
    if (next.empty()) break;
    ++level;
    frontier.swap(next);
  }
  return level;
}

struct projection_builder {
  const mixed_graph& g;
  bool inverse;
  int depth;
  std::size_t budget;
  std::size_t count = 0;
  std::vector<char> on_path;

  projection_node build(vertex v, int level) {
    if (++count > budget)
      throw error(errc::budget_exceeded,
                  "projection node budget of " + std::to_string(budget) +
                      " exceeded");
    projection_node node{v, level, false, {}};
    if (level == depth) return node;
    on_path[v] = 1;
    const int n = g.order();
    for (vertex w = 1; w <= n; ++w) {
      const bool adj = inverse ? g.has(w, v) : g.has(v, w);
      if (adj && !on_path[w]) node.children.push_back(build(w, level + 1));
    }
    on_path[v] = 0;
    node.exhausted = node.children.empty();
    return node;
  }
};

inline projection build(const mixed_graph& g, vertex u, int k,
                        std::size_t node_budget, bool inverse) {
  g.check_vertex(u);
  if (node_budget == 0)
    throw std::invalid_argument("node budget must be positive");
  const int depth = k == k_auto_depth ? reach_depth(g, u, inverse) : k;
  if (depth < 0) throw std::invalid_argument("projection depth must be >= 0");
  projection_builder b{g, inverse, depth, node_budget, 0,
                       std::vector<char>(static_cast<std::size_t>(g.order()) + 1, 0)};
  projection p;
  p.base = u;
  p.depth = depth;
  p.direction =
      inverse ? projection_direction::inverse : projection_direction::direct;
  p.root = b.build(u, 0);
  return p;
}

}  // namespace detail

inline projection build_projection(const mixed_graph& g, vertex u,
                                   int k = k_auto_depth,
                                   std::size_t node_budget = k_default_node_budget) {
  return detail::build(g, u, k, node_budget, false);
}

inline projection build_inverse_projection(
    const mixed_graph& g, vertex u, int k = k_auto_depth,
    std::size_t node_budget = k_default_node_budget) {
  return detail::build(g, u, k, node_budget, true);
}

/// One occurrence of a vertex in a projection.
struct projection_instance {
  vertex v{};
  int level = 0;
  std::vector<vertex> root_path;  // base .. v inclusive
  /// True for the instance closest to the base, leftmost among ties;
  /// the other instances are replicas and signal cycles.
  bool original = false;

  friend bool operator==(const projection_instance&,
                         const projection_instance&) = default;
};

/// All instances per vertex, in preorder (leftmost-first) encounter order.
using replica_report = std::map<vertex, std::vector<projection_instance>>;

inline replica_report report_replicas(const projection& p) {
  replica_report report;
  std::vector<vertex> path;
  auto walk = [&](auto&& self, const projection_node& node) -> void {
    path.push_back(node.v);
    report[node.v].push_back({node.v, node.level, path, false});
    for (const projection_node& c : node.children) self(self, c);
    path.pop_back();
  };
  walk(walk, p.root);
  for (auto& [v, instances] : report) {
    int min_level = instances.front().level;
    for (const auto& inst : instances)
      min_level = std::min(min_level, inst.level);
    for (auto& inst : instances) {
      if (inst.level == min_level) {
        inst.original = true;  // preorder: first hit at min level is leftmost
        break;
      }
    }
  }
  return report;
}

inline std::vector<vertex> replicated_vertices(const replica_report& report) {
  std::vector<vertex> out;
  for (const auto& [v, instances] : report)
    if (instances.size() > 1) out.push_back(v);
  return out;
}

namespace detail {

inline bool contains_path(const projection_node& node,
                          const std::vector<vertex>& path, std::size_t at) {
  if (at >= path.size() || node.v != path[at]) return false;
  if (at + 1 == path.size()) return true;
  for (const projection_node& c : node.children)
    if (contains_path(c, path, at + 1)) return true;
  return false;
}

}  // namespace detail

/// Length of the cycle witnessed by two instances of one vertex: the two
/// root-path suffixes below the deepest common ancestor form a closed walk.
/// When the ancestor is the base this is the sum of the two level numbers.
inline int cycle_length(const projection& p, const std::vector<vertex>& inst_a,
                        const std::vector<vertex>& inst_b) {
  if (inst_a.empty() || inst_b.empty())
    throw std::invalid_argument("cycle_length: empty instance path");
  if (inst_a.back() != inst_b.back())
    throw std::invalid_argument(
        "cycle_length: instances are of different vertices");
  if (inst_a == inst_b)
    throw std::invalid_argument("cycle_length: identical instances");
  if (!detail::contains_path(p.root, inst_a, 0) ||
      !detail::contains_path(p.root, inst_b, 0))
    throw std::invalid_argument(
        "cycle_length: instance path not found in projection");
  std::size_t common = 0;
  while (common < inst_a.size() && common < inst_b.size() &&
         inst_a[common] == inst_b[common])
    ++common;
  if (common == inst_a.size() || common == inst_b.size())
    throw error(errc::same_branch,
                "instances of vertex " + std::to_string(inst_a.back()) +
                    " lie on one branch");
  // levels are path lengths: level(a) = |inst_a|-1, ancestor level = common-1
  return static_cast<int>(inst_a.size() + inst_b.size()) -
         2 * static_cast<int>(common);
}

/// True when every graph vertex appears as at least one instance.
inline bool is_vertex_complete(const projection& p, const mixed_graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
  auto walk = [&](auto&& self, const projection_node& node) -> void {
    if (node.v >= 1 && node.v <= g.order()) seen[node.v] = 1;
    for (const projection_node& c : node.children) self(self, c);
  };
  walk(walk, p.root);
  for (vertex v = 1; v <= g.order(); ++v)
    if (!seen[v]) return false;
  return true;
}

/// True when the projection determines all vertices and all adjacencies of
/// g: an edge is covered by a parent->child link in either direction, an
/// arc only by a link in its own direction.
inline bool is_complete(const projection& p, const mixed_graph& g) {
  if (!is_vertex_complete(p, g)) return false;
  const int n = g.order();
  std::vector<char> link(static_cast<std::size_t>(n) * n, 0);
  auto walk = [&](auto&& self, const projection_node& node) -> void {
    for (const projection_node& c : node.children) {
      // in an inverse projection the child is adjacent *to* the parent
      const vertex from = p.direction == projection_direction::direct ? node.v : c.v;
      const vertex to = p.direction == projection_direction::direct ? c.v : node.v;
      link[static_cast<std::size_t>(from - 1) * n + (to - 1)] = 1;
      self(self, c);
    }
  };
  walk(walk, p.root);
  auto linked = [&](vertex a, vertex b) {
    return link[static_cast<std::size_t>(a - 1) * n + (b - 1)] != 0;
  };
  for (vertex u = 1; u <= n; ++u) {
    for (vertex v = u + 1; v <= n; ++v) {
      switch (g.classify(u, v)) {
        case pair_kind::edge:
          if (!linked(u, v) && !linked(v, u)) return false;
          break;
        case pair_kind::arc_forward:
          if (!linked(u, v)) return false;
          break;
        case pair_kind::arc_backward:
          if (!linked(v, u)) return false;
          break;
        case pair_kind::none:
          break;
      }
    }
  }
  return true;
}

}  // namespace projpath
