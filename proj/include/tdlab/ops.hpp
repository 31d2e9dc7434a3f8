#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "tdlab/graph.hpp"

namespace tdlab {

/// Subgraph induced by `keep`, renumbered by ascending original id.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  std::array<int, kMaxOrder> new_id{};
  int next = 0;
  for_each_vertex(keep, [&](Vertex v) { new_id[v] = next++; });
  std::vector<VertexMask> rows(next, 0);
  for_each_vertex(keep, [&](Vertex v) {
    for_each_vertex(g.rows()[v] & keep, [&](Vertex w) { rows[new_id[v]] |= bit(new_id[w]); });
  });
  return Graph::from_adjacency(std::move(rows));
}

inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  VertexMask mask = 0;
  for (Vertex v : keep) {
    mask |= bit(g.check_vertex(v));
  }
  return induced_subgraph(g, mask);
}

inline Graph delete_edge(const Graph& g, const EdgeRef& e) {
  if (!g.has_edge(e)) {
    throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is not in the graph");
  }
  std::vector<VertexMask> rows = g.rows();
  rows[e.u] &= ~bit(e.v);
  rows[e.v] &= ~bit(e.u);
  return Graph::from_adjacency(std::move(rows));
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
  return induced_subgraph(g, g.vertices() & ~bit(g.check_vertex(v)));
}

/// Merges the endpoints of e; the merged vertex keeps the smaller endpoint's
/// slot and the larger endpoint is removed.
inline Graph contract_edge(const Graph& g, const EdgeRef& e) {
  if (!g.has_edge(e)) {
    throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is not in the graph");
  }
  std::vector<VertexMask> rows = g.rows();
  const VertexMask merged = (rows[e.u] | rows[e.v]) & ~bit(e.u) & ~bit(e.v);
  for (VertexMask& row : rows) {
    row &= ~bit(e.v);
  }
  rows[e.v] = 0;
  rows[e.u] = merged;
  for_each_vertex(merged, [&](Vertex w) { rows[w] |= bit(e.u); });
  const Graph widened = Graph::from_adjacency(std::move(rows));
  return induced_subgraph(widened, widened.vertices() & ~bit(e.v));
}

/// Deletes v and makes its former neighbourhood a clique.
inline Graph star_clique_transform(const Graph& g, Vertex v) {
  const VertexMask hood = g.neighbors(v);
  std::vector<VertexMask> rows = g.rows();
  for_each_vertex(hood, [&](Vertex w) { rows[w] |= hood & ~bit(w); });
  const Graph widened = Graph::from_adjacency(std::move(rows));
  return induced_subgraph(widened, widened.vertices() & ~bit(v));
}

inline Graph complement(const Graph& g) {
  std::vector<VertexMask> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    rows[v] = ~g.rows()[v] & g.vertices() & ~bit(v);
  }
  return Graph::from_adjacency(std::move(rows));
}

/// h's vertices follow g's, shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  if (shift + h.order() > kMaxOrder) {
    throw DomainError("disjoint union exceeds the maximum order");
  }
  std::vector<VertexMask> rows = g.rows();
  for (VertexMask row : h.rows()) {
    rows.push_back(row << shift);
  }
  return Graph::from_adjacency(std::move(rows));
}

/// Vertex (a, b) of g x h is numbered a * h.order() + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  if (g.order() * m > kMaxOrder) {
    throw DomainError("cartesian product exceeds the maximum order");
  }
  std::vector<EdgeRef> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const EdgeRef& e : h.edges()) {
      edges.emplace_back(a * m + e.u, a * m + e.v);
    }
  }
  for (const EdgeRef& e : g.edges()) {
    for (Vertex b = 0; b < m; ++b) {
      edges.emplace_back(e.u * m + b, e.v * m + b);
    }
  }
  return Graph(g.order() * m, edges);
}

/// Renames vertex v to perm[v]; perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw DomainError("permutation length does not match graph order");
  }
  VertexMask seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || (seen & bit(p)) != 0) {
      throw DomainError("not a permutation of the vertex set");
    }
    seen |= bit(p);
  }
  std::vector<VertexMask> rows(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for_each_vertex(g.rows()[v], [&](Vertex w) { rows[perm[v]] |= bit(perm[w]); });
  }
  return Graph::from_adjacency(std::move(rows));
}

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
/// s, t: unit vertex capacities via the split-vertex network, augmented by BFS.
inline int local_connectivity(const Graph& g, Vertex s, Vertex t) {
  const int n = g.order();
  const int nodes = 2 * n;  // in(v) = 2v, out(v) = 2v + 1
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  const auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for_each_vertex(g.rows()[v], [&](Vertex w) { at(2 * v + 1, 2 * w) = n; });
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(nodes);
  while (true) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty() && prev[sink] < 0) {
      const int a = queue.front();
      queue.pop();
      for (int b = 0; b < nodes; ++b) {
        if (prev[b] < 0 && at(a, b) > 0) {
          prev[b] = a;
          queue.push(b);
        }
      }
    }
    if (prev[sink] < 0) {
      return flow;
    }
    for (int b = sink; b != source; b = prev[b]) {
      at(prev[b], b) -= 1;
      at(b, prev[b]) += 1;
    }
    ++flow;
  }
}

}  // namespace detail

/// Size of a minimum vertex cut; n-1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) {
    throw DomainError("vertex connectivity needs at least one vertex");
  }
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (!g.adjacent(s, t)) {
        best = std::min(best, detail::local_connectivity(g, s, t));
      }
    }
  }
  return best;
}

namespace detail {

inline bool extend_induced_embedding(const Graph& g, const Graph& pattern,
                                     std::span<const Vertex> order, std::vector<Vertex>& image,
                                     std::size_t depth, VertexMask used) {
  if (depth == order.size()) {
    return true;
  }
  const Vertex p = order[depth];
  VertexMask candidates = g.vertices() & ~used;
  for (std::size_t j = 0; j < depth; ++j) {
    const VertexMask row = g.rows()[image[order[j]]];
    candidates &= pattern.adjacent(p, order[j]) ? row : ~row;
  }
  const int need = pattern.degree(p);
  bool found = false;
  for_each_vertex(candidates, [&](Vertex w) {
    if (found || g.degree(w) < need) {
      return;
    }
    image[p] = w;
    found = extend_induced_embedding(g, pattern, order, image, depth + 1, used | bit(w));
  });
  return found;
}

}  // namespace detail

/// True iff some vertex subset of g induces a copy of pattern.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > g.order()) {
    return false;
  }
  // Place high-degree pattern vertices first, then grow along adjacency.
  std::vector<Vertex> order;
  VertexMask placed = 0;
  while (static_cast<int>(order.size()) < pattern.order()) {
    Vertex pick = -1;
    int pick_links = -1;
    for_each_vertex(pattern.vertices() & ~placed, [&](Vertex v) {
      const int links = popcount(pattern.rows()[v] & placed) * kMaxOrder + pattern.degree(v);
      if (links > pick_links) {
        pick = v;
        pick_links = links;
      }
    });
    order.push_back(pick);
    placed |= bit(pick);
  }
  std::vector<Vertex> image(pattern.order(), -1);
  return detail::extend_induced_embedding(g, pattern, order, image, 0, 0);
}

}  // namespace tdlab
