// Simple unweighted mixed graphs (undirected edges + directed arcs) over a
// dense boolean adjacency relation.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace projpath {

/// External vertex label; 1-based in the public API and in all file formats.
using vertex = int;

/// Error categories raised by the library.
enum class errc {
  non_square,
  self_loop,
  bad_token,
  bad_format,
  vertex_out_of_range,
  conflicting_pair,
  budget_exceeded,
  path_budget_exceeded,
  syntax_error,
  duplicate_sibling,
  repeat_on_path,
  same_branch,
  no_path,
  bad_config,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Relation of an ordered pair (u, v): nothing, an undirected edge, an arc
/// u->v, or an arc v->u.
enum class pair_kind { none, edge, arc_forward, arc_backward };

enum class link_kind { edge, arc };

/// One item of an edge-list description: an edge {u, v} or an arc u->v.
struct edge_spec {
  vertex u{};
  vertex v{};
  link_kind kind{link_kind::edge};

  friend bool operator==(const edge_spec&, const edge_spec&) = default;
};

/// Simple unweighted mixed graph without loops or multiplicities.
///
/// Adjacency is stored as a dense boolean relation: has(u, v) && has(v, u)
/// is an undirected edge, has(u, v) alone an arc u->v. Instances are
/// immutable after construction and safe for concurrent reads.
class mixed_graph {
 public:
  mixed_graph() = default;

  /// Builds from a row-major n*n cell vector (nonzero = adjacent).
  /// Nonzero diagonal cells are rejected.
  static mixed_graph from_cells(int n, const std::vector<std::uint8_t>& cells) {
    if (n < 0 || cells.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("from_cells: cell vector does not match n*n");
    mixed_graph g(n);
    for (vertex u = 1; u <= n; ++u) {
      for (vertex v = 1; v <= n; ++v) {
        if (!cells[static_cast<std::size_t>(u - 1) * n + (v - 1)]) continue;
        if (u == v)
          throw error(errc::self_loop,
                      "self-loop at vertex " + std::to_string(u));
        g.cell(u, v) = 1;
      }
    }
    g.recount();
    return g;
  }

  /// Builds from explicit edge/arc items. Duplicate items are idempotent;
  /// contradicting items on the same pair (edge vs arc, or opposite arcs)
  /// are rejected.
  static mixed_graph from_edges(int n, const std::vector<edge_spec>& items) {
    if (n < 0) throw std::invalid_argument("from_edges: negative order");
    mixed_graph g(n);
    // per unordered pair: 0 unset, 1 edge, 2 arc lo->hi, 3 arc hi->lo
    std::vector<std::uint8_t> claimed(static_cast<std::size_t>(n) * n, 0);
    for (const edge_spec& it : items) {
      if (it.u < 1 || it.u > n || it.v < 1 || it.v > n)
        throw error(errc::vertex_out_of_range,
                    "edge item (" + std::to_string(it.u) + ", " +
                        std::to_string(it.v) + ") outside 1.." +
                        std::to_string(n));
      if (it.u == it.v)
        throw error(errc::self_loop,
                    "self-loop at vertex " + std::to_string(it.u));
      const vertex lo = std::min(it.u, it.v);
      const vertex hi = std::max(it.u, it.v);
      std::uint8_t want = 1;
      if (it.kind == link_kind::arc) want = it.u == lo ? 2 : 3;
      std::uint8_t& slot = claimed[static_cast<std::size_t>(lo - 1) * n + (hi - 1)];
      if (slot != 0 && slot != want)
        throw error(errc::conflicting_pair,
                    "conflicting items for pair {" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "}");
      slot = want;
      if (it.kind == link_kind::edge) {
        g.cell(it.u, it.v) = 1;
        g.cell(it.v, it.u) = 1;
      } else {
        g.cell(it.u, it.v) = 1;
      }
    }
    g.recount();
    return g;
  }

  int order() const noexcept { return n_; }

  /// Count of true off-diagonal cells: arcs count once, edges twice.
  int ordered_size() const noexcept { return m_ordered_; }

  /// Count of adjacent unordered pairs: edges once plus arcs.
  int undirected_size() const noexcept {
    int m = 0;
    for (vertex u = 1; u <= n_; ++u)
      for (vertex v = u + 1; v <= n_; ++v)
        if (has(u, v) || has(v, u)) ++m;
    return m;
  }

  bool has(vertex u, vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
  }

  /// Neighborhood N(v): vertices adjacent from v, ascending.
  std::vector<vertex> out_neighbors(vertex v) const {
    check_vertex(v);
    std::vector<vertex> out;
    const std::uint8_t* row = &adj_[static_cast<std::size_t>(v - 1) * n_];
    for (vertex w = 1; w <= n_; ++w)
      if (row[w - 1]) out.push_back(w);
    return out;
  }

  /// Vertices v is adjacent from (reverse relation), ascending.
  std::vector<vertex> in_neighbors(vertex v) const {
    check_vertex(v);
    std::vector<vertex> in;
    for (vertex w = 1; w <= n_; ++w)
      if (adj_[static_cast<std::size_t>(w - 1) * n_ + (v - 1)]) in.push_back(w);
    return in;
  }

  mixed_graph transposed() const {
    mixed_graph t(n_);
    for (vertex u = 1; u <= n_; ++u)
      for (vertex v = 1; v <= n_; ++v)
        if (adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)])
          t.cell(v, u) = 1;
    t.recount();
    return t;
  }

  pair_kind classify(vertex u, vertex v) const {
    const bool uv = has(u, v);
    const bool vu = has(v, u);
    if (uv && vu) return pair_kind::edge;
    if (uv) return pair_kind::arc_forward;
    if (vu) return pair_kind::arc_backward;
    return pair_kind::none;
  }

  /// Filled fraction of the off-diagonal relation; 0 for n <= 1.
  double density() const noexcept {
    if (n_ <= 1) return 0.0;
    return static_cast<double>(m_ordered_) /
           (static_cast<double>(n_) * (n_ - 1));
  }

  void check_vertex(vertex v) const {
    if (v < 1 || v > n_)
      throw error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(n_));
  }

  friend bool operator==(const mixed_graph&, const mixed_graph&) = default;

 private:
  explicit mixed_graph(int n)
      : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  std::uint8_t& cell(vertex u, vertex v) {
    return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
  }

  void recount() {
    m_ordered_ = 0;
    for (std::uint8_t c : adj_) m_ordered_ += c != 0;
  }

  int n_ = 0;
  int m_ordered_ = 0;
  std::vector<std::uint8_t> adj_;
};

}  // namespace projpath
