#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"
#include "tdlab/labelings.hpp"
#include "tdlab/ops.hpp"
#include "tdlab/solver.hpp"

namespace tdlab {

/// v is 1-unique iff the star-clique transform at v has smaller tree-depth.
inline bool is_one_unique_vertex(const Graph& g, Vertex v, SolverOptions options = {}) {
  g.check_vertex(v);
  const int td = tree_depth_value(g, options);
  return tree_depth_decision(star_clique_transform(g, v), td - 1, options);
}

inline std::vector<Vertex> one_unique_vertices(const Graph& g, SolverOptions options = {}) {
  const int td = tree_depth_value(g, options);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (tree_depth_decision(star_clique_transform(g, v), td - 1, options)) {
      out.push_back(v);
    }
  }
  return out;
}

inline bool is_one_unique(const Graph& g, SolverOptions options = {}) {
  return static_cast<int>(one_unique_vertices(g, options).size()) == g.order();
}

namespace detail {

inline void require_nonempty(const Graph& g) {
  if (g.order() == 0) {
    throw DomainError("criticality is defined for nonempty graphs only");
  }
}

}  // namespace detail

/// Every single-edge deletion lowers td.
inline bool is_subgraph_critical(const Graph& g, SolverOptions options = {}) {
  detail::require_nonempty(g);
  const int td = tree_depth_value(g, options);
  for (const EdgeRef& e : g.edges()) {
    if (!tree_depth_decision(delete_edge(g, e), td - 1, options)) {
      return false;
    }
  }
  return true;
}

/// Every single-vertex deletion lowers td.
inline bool is_induced_subgraph_critical(const Graph& g, SolverOptions options = {}) {
  detail::require_nonempty(g);
  const int td = tree_depth_value(g, options);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!tree_depth_decision(delete_vertex(g, v), td - 1, options)) {
      return false;
    }
  }
  return true;
}

/// Every proper minor has smaller td. Minors are monotone for td, so it is
/// enough to try every single deletion and contraction. With `shortcut`,
/// contractions are tried only on edges whose endpoints are both not
/// 1-unique: contracting uv where v is 1-unique gives a subgraph of the
/// star-clique transform at v, which already has smaller td.
inline bool is_minor_critical(const Graph& g, bool shortcut, SolverOptions options = {}) {
  detail::require_nonempty(g);
  const int td = tree_depth_value(g, options);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!tree_depth_decision(delete_vertex(g, v), td - 1, options)) {
      return false;
    }
  }
  const auto edges = g.edges();
  for (const EdgeRef& e : edges) {
    if (!tree_depth_decision(delete_edge(g, e), td - 1, options)) {
      return false;
    }
  }
  VertexMask one_unique = 0;
  if (shortcut) {
    for (Vertex v : one_unique_vertices(g, options)) {
      one_unique |= bit(v);
    }
  }
  for (const EdgeRef& e : edges) {
    if ((one_unique & (bit(e.u) | bit(e.v))) != 0) {
      continue;
    }
    if (!tree_depth_decision(contract_edge(g, e), td - 1, options)) {
      return false;
    }
  }
  return true;
}

struct ConjectureChecks {
  bool order_bound = false;   // n <= 2^(td-1)
  bool degree_bound = false;  // max degree <= td - 1
};

/// Per-graph dossier. Deltas are td(g) - td(minor), indexed like `edges`
/// (ascending) or by vertex id.
struct CriticalityReport {
  int order = 0;
  int td = 0;
  int surplus = 0;
  int max_degree = 0;
  std::vector<EdgeRef> edges;
  std::vector<int> edge_deletion_deltas;
  std::vector<int> contraction_deltas;
  std::vector<int> vertex_deletion_deltas;
  std::vector<bool> one_unique;
  std::vector<std::optional<int>> min_t;
  bool is_minor_critical = false;
  bool is_subgraph_critical = false;
  bool is_induced_subgraph_critical = false;
  bool is_one_unique_graph = false;
  ConjectureChecks conjecture_checks;

  friend bool operator==(const CriticalityReport& a, const CriticalityReport& b) {
    return a.order == b.order && a.td == b.td && a.surplus == b.surplus &&
           a.max_degree == b.max_degree && a.edges == b.edges &&
           a.edge_deletion_deltas == b.edge_deletion_deltas &&
           a.contraction_deltas == b.contraction_deltas &&
           a.vertex_deletion_deltas == b.vertex_deletion_deltas && a.one_unique == b.one_unique &&
           a.min_t == b.min_t && a.is_minor_critical == b.is_minor_critical &&
           a.is_subgraph_critical == b.is_subgraph_critical &&
           a.is_induced_subgraph_critical == b.is_induced_subgraph_critical &&
           a.is_one_unique_graph == b.is_one_unique_graph &&
           a.conjecture_checks.order_bound == b.conjecture_checks.order_bound &&
           a.conjecture_checks.degree_bound == b.conjecture_checks.degree_bound;
  }
};

inline CriticalityReport criticality_report(const Graph& g, SolverOptions options = {}) {
  detail::require_nonempty(g);
  CriticalityReport r;
  r.order = g.order();
  r.td = tree_depth_value(g, options);
  r.surplus = r.order - r.td;
  r.max_degree = g.max_degree();
  r.edges = g.edges();
  for (const EdgeRef& e : r.edges) {
    r.edge_deletion_deltas.push_back(r.td - tree_depth_value(delete_edge(g, e), options));
    r.contraction_deltas.push_back(r.td - tree_depth_value(contract_edge(g, e), options));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    r.vertex_deletion_deltas.push_back(r.td - tree_depth_value(delete_vertex(g, v), options));
    r.one_unique.push_back(
        tree_depth_value(star_clique_transform(g, v), options) < r.td);
  }
  r.min_t = min_unique_labels(g, options);

  const auto positive = [](int d) { return d >= 1; };
  r.is_subgraph_critical = std::all_of(r.edge_deletion_deltas.begin(), r.edge_deletion_deltas.end(), positive);
  r.is_induced_subgraph_critical =
      std::all_of(r.vertex_deletion_deltas.begin(), r.vertex_deletion_deltas.end(), positive);
  r.is_minor_critical = r.is_subgraph_critical && r.is_induced_subgraph_critical &&
                        std::all_of(r.contraction_deltas.begin(), r.contraction_deltas.end(), positive);
  r.is_one_unique_graph = std::all_of(r.one_unique.begin(), r.one_unique.end(), [](bool b) { return b; });
  r.conjecture_checks.order_bound = r.td >= 1 && r.td - 1 < 62 &&
                                    static_cast<long long>(r.order) <= (1LL << (r.td - 1));
  r.conjecture_checks.degree_bound = r.max_degree <= r.td - 1;
  return r;
}

/// Spanning subgraph reached by deleting td-preserving edges in ascending
/// order, restarting the scan after every deletion, until none is left.
struct CriticalSpanningSubgraph {
  Graph graph;
  std::vector<EdgeRef> removed;
};

inline CriticalSpanningSubgraph greedy_critical_spanning_subgraph(const Graph& g,
                                                                  SolverOptions options = {}) {
  detail::require_nonempty(g);
  const int td = tree_depth_value(g, options);
  CriticalSpanningSubgraph out{g, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const EdgeRef& e : out.graph.edges()) {
      Graph smaller = delete_edge(out.graph, e);
      if (!tree_depth_decision(smaller, td - 1, options)) {
        out.graph = std::move(smaller);
        out.removed.push_back(e);
        changed = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace tdlab
