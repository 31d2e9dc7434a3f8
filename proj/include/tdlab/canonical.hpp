#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tdlab/graph.hpp"
#include "tdlab/io.hpp"
#include "tdlab/ops.hpp"

namespace tdlab {

inline constexpr int kMaxCanonicalOrder = 10;

/// graph6 text of a canonical relabeling; equal iff the graphs are isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Colour refinement seeded by degree. Colours are ranks of sorted
/// signatures, so the result is invariant under relabeling.
inline std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) {
    color[v] = g.degree(v);
  }
  int classes = -1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> rank;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for_each_vertex(g.rows()[v], [&](Vertex w) { sig[v].second.push_back(color[w]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
      rank.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : rank) {
      id = next++;
    }
    for (Vertex v = 0; v < n; ++v) {
      color[v] = rank[sig[v]];
    }
    if (next == classes) {
      return color;
    }
    classes = next;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    color_ = refine_colors(g);
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    order_.assign(n_, -1);
    best_cols_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) {
      descend(0, 0);
    }
    return best_order_;
  }

 private:
  // Column j of the upper triangle: x(order[0], w) is the most significant bit.
  unsigned column(int depth, Vertex w) const {
    unsigned col = 0;
    for (int i = 0; i < depth; ++i) {
      col = (col << 1) | (g_.adjacent(order_[i], w) ? 1u : 0u);
    }
    return col;
  }

  bool twins(Vertex a, Vertex b) const {
    return (g_.rows()[a] & ~bit(b)) == (g_.rows()[b] & ~bit(a));
  }

  void descend(int depth, VertexMask used) {
    if (depth == n_) {
      best_order_ = order_;
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex w = 0; w < n_; ++w) {
      if ((used & bit(w)) != 0 || color_[w] != slot_color_[depth]) {
        continue;
      }
      // Swapping twins fixes every placed vertex, so their subtrees coincide.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, w); })) {
        continue;
      }
      tried.push_back(w);
      // The prefix before `depth` equals best_cols_ whenever we get here.
      const unsigned col = column(depth, w);
      if (best_len_ > depth) {
        if (col < best_cols_[depth]) {
          continue;
        }
        if (col > best_cols_[depth]) {
          best_len_ = depth;
        }
      }
      if (best_len_ == depth) {
        best_cols_[depth] = col;
        best_len_ = depth + 1;
      }
      order_[depth] = w;
      descend(depth + 1, used | bit(w));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::vector<Vertex> order_;
  std::vector<unsigned> best_cols_;
  int best_len_ = 0;
  std::vector<Vertex> best_order_;
};

}  // namespace detail

/// Exact canonical form for graphs with at most 10 vertices: the
/// lexicographically largest upper-triangle bit string over all vertex
/// orders that respect the refined colour classes.
inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw DomainError("canonical form supports at most 10 vertices, got " +
                      std::to_string(g.order()));
  }
  const std::vector<Vertex> order = detail::CanonicalSearch(g).run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) {
    perm[order[pos]] = pos;
  }
  return CanonicalForm{to_graph6(relabel(g, perm))};
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace tdlab
