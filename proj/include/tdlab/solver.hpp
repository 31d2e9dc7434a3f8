#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"

namespace tdlab {

/// Largest order the exact solver accepts; its memo is keyed by vertex subsets.
inline constexpr int kMaxSolverOrder = 25;

/// Assignment of a positive integer label to every vertex, indexed by id.
class Labeling {
 public:
  Labeling() = default;

  explicit Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (labels_[v] < 1) {
        throw DomainError("label of vertex " + std::to_string(v) + " is not positive");
      }
    }
  }

  /// Parses "3,1,2" (vertex-id order, whitespace around entries allowed).
  static Labeling parse_csv(std::string_view text) {
    std::vector<int> labels;
    std::size_t pos = 0;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
      text.remove_suffix(1);
    }
    if (text.empty()) {
      return Labeling{};
    }
    while (true) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view field = text.substr(pos, end - pos);
      const std::size_t first = field.find_first_not_of(" \t");
      const std::size_t last = field.find_last_not_of(" \t");
      if (first == std::string_view::npos) {
        throw ParseError("empty labeling entry", pos);
      }
      field = field.substr(first, last - first + 1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size() || value < 1) {
        throw ParseError("labeling entry is not a positive integer", pos + first);
      }
      labels.push_back(value);
      if (end == text.size()) {
        break;
      }
      pos = end + 1;
    }
    return Labeling(std::move(labels));
  }

  std::string to_csv() const {
    std::string out;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (v > 0) {
        out += ',';
      }
      out += std::to_string(labels_[v]);
    }
    return out;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](Vertex v) const { return labels_.at(v); }
  const std::vector<int>& values() const noexcept { return labels_; }

  int max_label() const noexcept {
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
  }

  int distinct_count() const { return static_cast<int>(std::set<int>(labels_.begin(), labels_.end()).size()); }

  /// How many vertices carry `label`.
  int count(int label) const {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), label));
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
};

/// Two vertices u < v sharing label c that are joined by a path whose
/// vertices all carry labels <= c.
struct FeasibilityViolation {
  int label = 0;
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const FeasibilityViolation&, const FeasibilityViolation&) = default;
};

struct FeasibilityResult {
  bool feasible = true;
  std::optional<FeasibilityViolation> violation;

  explicit operator bool() const noexcept { return feasible; }
};

/// Checks feasibility label by label: in g[{w : lab(w) <= c}] no component may
/// hold two vertices labeled c. Reports the violation with the smallest
/// (c, u, v).
inline FeasibilityResult verify_feasible(const Graph& g, const Labeling& lab) {
  if (static_cast<int>(lab.size()) != g.order()) {
    throw DomainError("labeling has " + std::to_string(lab.size()) + " entries for a graph of order " +
                      std::to_string(g.order()));
  }
  std::vector<int> levels = lab.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (int c : levels) {
    VertexMask upto = 0;
    VertexMask exact = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (lab[v] <= c) {
        upto |= bit(v);
      }
      if (lab[v] == c) {
        exact |= bit(v);
      }
    }
    std::optional<FeasibilityViolation> first;
    for (VertexMask comp : components(g, upto)) {
      const VertexMask hits = comp & exact;
      if (popcount(hits) >= 2) {
        const Vertex u = lowest(hits);
        const Vertex v = lowest(hits & ~bit(u));
        if (!first || u < first->u || (u == first->u && v < first->v)) {
          first = FeasibilityViolation{c, u, v};
        }
      }
    }
    if (first) {
      return FeasibilityResult{false, first};
    }
  }
  return FeasibilityResult{};
}

/// Exact tree-depth together with a certifying feasible labeling and the
/// elimination forest it was read from (parent -1 marks a root).
struct TreeDepthWitness {
  int value = 0;
  Labeling labeling;
  std::vector<Vertex> parent;
};

struct SolverOptions {
  /// Maximum number of memoized vertex subsets; 0 means unlimited.
  std::size_t max_states = 0;
};

/// Memoized recursion td(S) = max over components, and for connected S
/// 1 + min_v td(S - v), with a cutoff that lets a call stop as soon as it
/// proves td(S) > cap. One instance belongs to one graph and one caller.
class TreeDepthSolver {
 public:
  using Subset = std::uint32_t;

  explicit TreeDepthSolver(const Graph& g, SolverOptions options = {})
      : g_(g), options_(options) {
    if (g.order() > kMaxSolverOrder) {
      throw BudgetError("exact tree-depth refuses graphs with more than 25 vertices (got " +
                        std::to_string(g.order()) + ")");
    }
  }

  const Graph& graph() const noexcept { return g_; }

  int tree_depth() { return tree_depth(all()); }

  int tree_depth(Subset s) { return solve(s, popcount(s)); }

  /// True iff td(g[s]) <= k.
  bool at_most(Subset s, int k) {
    if (k < 0) {
      return false;
    }
    return solve(s, k) <= k;
  }

  bool at_most(int k) { return at_most(all(), k); }

  TreeDepthWitness witness() {
    const int n = g_.order();
    TreeDepthWitness w;
    w.value = tree_depth();
    w.parent.assign(n, -1);
    std::vector<int> height(n, 0);
    build_forest(all(), -1, w.parent, height);
    std::vector<int> labels(n);
    for (Vertex v = 0; v < n; ++v) {
      labels[v] = height[v] + 1;
    }
    w.labeling = Labeling(std::move(labels));
    return w;
  }

  std::size_t states() const noexcept { return memo_.size(); }

  Subset all() const noexcept { return static_cast<Subset>(g_.vertices()); }

 private:
  struct Entry {
    std::int8_t lower = 0;
    std::int8_t exact = -1;
    std::int8_t choice = -1;
  };

  Entry& entry(Subset s) {
    auto [it, inserted] = memo_.try_emplace(s);
    if (inserted && options_.max_states != 0 && memo_.size() > options_.max_states) {
      throw BudgetError("tree-depth solver exceeded its budget of " +
                        std::to_string(options_.max_states) + " memo states");
    }
    return it->second;
  }

  // Returns td(s) when td(s) <= cap; otherwise some value > cap that is a
  // lower bound on td(s).
  int solve(Subset s, int cap) {
    if (s == 0) {
      return 0;
    }
    if (const auto it = memo_.find(s); it != memo_.end()) {
      if (it->second.exact >= 0) {
        return it->second.exact;
      }
      if (it->second.lower > cap) {
        return it->second.lower;
      }
    }
    const auto comps = components(g_, s);
    if (comps.size() > 1) {
      int worst = 0;
      for (VertexMask comp : comps) {
        const int r = solve(static_cast<Subset>(comp), cap);
        worst = std::max(worst, r);
        if (r > cap) {
          Entry& e = entry(s);
          e.lower = static_cast<std::int8_t>(std::max<int>(e.lower, r));
          return r;
        }
      }
      entry(s).exact = static_cast<std::int8_t>(worst);
      return worst;
    }

    const int size = popcount(s);
    if (size == 1 || is_clique(g_, s)) {
      Entry& e = entry(s);
      e.exact = static_cast<std::int8_t>(size);
      e.choice = static_cast<std::int8_t>(lowest(s));
      return size;
    }
    if (cap < 2) {
      Entry& e = entry(s);
      e.lower = std::max<std::int8_t>(e.lower, 2);
      return std::max(2, static_cast<int>(e.lower));
    }

    // best holds an achievable value once choice >= 0; otherwise cap + 1.
    int best = cap + 1;
    Vertex choice = -1;
    for (Subset rest = s; rest != 0; rest &= rest - 1) {
      const Vertex v = lowest(rest);
      const int r = solve(s & ~(Subset{1} << v), best - 2);
      if (r <= best - 2) {
        best = r + 1;
        choice = v;
        if (best <= 2) {
          break;
        }
      }
    }
    Entry& e = entry(s);
    if (choice < 0) {
      e.lower = static_cast<std::int8_t>(std::max(static_cast<int>(e.lower), cap + 1));
      return e.lower;
    }
    e.exact = static_cast<std::int8_t>(best);
    e.choice = static_cast<std::int8_t>(choice);
    return best;
  }

  // Children are recursed in ascending smallest-vertex order; returns the
  // height of the tallest tree built.
  int build_forest(Subset s, Vertex parent, std::vector<Vertex>& parents, std::vector<int>& height) {
    int tallest = -1;
    for (VertexMask comp : components(g_, s)) {
      const Subset c = static_cast<Subset>(comp);
      solve(c, popcount(c));
      const Vertex root = memo_.at(c).choice;
      parents[root] = parent;
      const int below = build_forest(c & ~(Subset{1} << root), root, parents, height);
      height[root] = below + 1;
      tallest = std::max(tallest, height[root]);
    }
    return tallest;
  }

  Graph g_;
  SolverOptions options_;
  std::unordered_map<Subset, Entry> memo_;
};

inline TreeDepthWitness tree_depth(const Graph& g, SolverOptions options = {}) {
  return TreeDepthSolver(g, options).witness();
}

inline int tree_depth_value(const Graph& g, SolverOptions options = {}) {
  return TreeDepthSolver(g, options).tree_depth();
}

/// True iff td(g) <= k.
inline bool tree_depth_decision(const Graph& g, int k, SolverOptions options = {}) {
  if (k < 0) {
    throw DomainError("tree-depth decision needs k >= 0");
  }
  return TreeDepthSolver(g, options).at_most(k);
}

/// s(G) = n(G) - td(G).
inline int surplus(const Graph& g, SolverOptions options = {}) {
  return g.order() - tree_depth_value(g, options);
}

}  // namespace tdlab
