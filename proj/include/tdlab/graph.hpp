#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/errors.hpp"

namespace tdlab {

using Vertex = int;

/// One bit per vertex; bit i set means vertex i is in the set.
using VertexMask = std::uint64_t;

/// Largest order a Graph can hold (one machine word of adjacency per vertex).
inline constexpr int kMaxOrder = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Calls f(v) for every vertex of m in ascending order.
template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

/// An undirected edge with normalized endpoints u < v.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;

  constexpr EdgeRef() = default;
  constexpr EdgeRef(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1, stored as
/// per-vertex adjacency bitsets. Values are immutable once built; every
/// structural operation returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : adj_(checked_order(n), 0) {}

  Graph(int n, std::span<const EdgeRef> edges) : Graph(n) {
    for (const EdgeRef& e : edges) {
      add_edge_unchecked(e);
    }
  }

  Graph(int n, std::initializer_list<EdgeRef> edges)
      : Graph(n, std::span<const EdgeRef>(edges.begin(), edges.size())) {}

  /// Builds a graph from adjacency rows; rejects loops and asymmetric rows.
  static Graph from_adjacency(std::vector<VertexMask> rows) {
    const int n = checked_order(static_cast<int>(rows.size()));
    const VertexMask all = full_mask(n);
    for (int v = 0; v < n; ++v) {
      if ((rows[v] & ~all) != 0 || (rows[v] & bit(v)) != 0) {
        throw DomainError("adjacency row " + std::to_string(v) + " is out of range or has a loop");
      }
      for_each_vertex(rows[v], [&](Vertex w) {
        if ((rows[w] & bit(v)) == 0) {
          throw DomainError("adjacency is not symmetric at {" + std::to_string(v) + "," +
                            std::to_string(w) + "}");
        }
      });
    }
    Graph g;
    g.adj_ = std::move(rows);
    return g;
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (VertexMask row : adj_) {
      twice += popcount(row);
    }
    return twice / 2;
  }

  bool empty() const noexcept { return adj_.empty(); }

  VertexMask vertices() const noexcept { return full_mask(order()); }

  VertexMask neighbors(Vertex v) const { return adj_.at(check_vertex(v)); }

  int degree(Vertex v) const { return popcount(neighbors(v)); }

  int max_degree() const noexcept {
    int d = 0;
    for (VertexMask row : adj_) {
      d = std::max(d, popcount(row));
    }
    return d;
  }

  bool adjacent(Vertex u, Vertex v) const { return (neighbors(u) & bit(check_vertex(v))) != 0; }

  bool has_edge(const EdgeRef& e) const {
    return e.u != e.v && e.u >= 0 && e.v < order() && adjacent(e.u, e.v);
  }

  /// Edges in ascending (u, v) order.
  std::vector<EdgeRef> edges() const {
    std::vector<EdgeRef> out;
    for (Vertex u = 0; u < order(); ++u) {
      for_each_vertex(adj_[u] & ~full_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
  }

  const std::vector<VertexMask>& rows() const noexcept { return adj_; }

  Vertex check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
      throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(order()));
    }
    return v;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kMaxOrder) {
      throw DomainError("graph order " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxOrder));
    }
    return n;
  }

  void add_edge_unchecked(const EdgeRef& e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }

  std::vector<VertexMask> adj_;
};

/// Connected components of g[within], each as a mask, ordered by smallest vertex.
inline std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  const auto& rows = g.rows();
  VertexMask rest = within;
  while (rest != 0) {
    VertexMask comp = rest & (~rest + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= rows[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

inline std::vector<VertexMask> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_clique(const Graph& g, VertexMask s) {
  const auto& rows = g.rows();
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) { ok = ok && ((rows[v] | bit(v)) & s) == s; });
  return ok;
}

}  // namespace tdlab
