#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"
#include "tdlab/ops.hpp"
#include "tdlab/solver.hpp"

namespace tdlab {

/// A feasible labeling is reduced when every label used more than once is
/// smaller than every label used exactly once.
inline bool is_reduced(const Labeling& lab) {
  std::map<int, int> uses;
  for (int l : lab.values()) {
    ++uses[l];
  }
  int highest_repeated = 0;
  int lowest_single = std::numeric_limits<int>::max();
  for (const auto& [label, count] : uses) {
    if (count > 1) {
      highest_repeated = std::max(highest_repeated, label);
    } else {
      lowest_single = std::min(lowest_single, label);
    }
  }
  return highest_repeated < lowest_single;
}

/// Repeated labels l1 < ... < lk become 1..k; labels used once keep their
/// relative order and take k+1, k+2, ...
inline Labeling reduce_labeling(const Graph& g, const Labeling& lab) {
  if (!verify_feasible(g, lab)) {
    throw DomainError("reduce_labeling needs a feasible labeling");
  }
  std::map<int, int> uses;
  for (int l : lab.values()) {
    ++uses[l];
  }
  std::map<int, int> remap;
  int next = 1;
  for (const auto& [label, count] : uses) {
    if (count > 1) {
      remap[label] = next++;
    }
  }
  for (const auto& [label, count] : uses) {
    if (count == 1) {
      remap[label] = next++;
    }
  }
  std::vector<int> out(lab.size());
  for (std::size_t v = 0; v < lab.size(); ++v) {
    out[v] = remap[lab.values()[v]];
  }
  return Labeling(std::move(out));
}

/// Induced subgraph on the vertices whose label is shared, under a reduced
/// optimal labeling, with the labeling restricted to it.
struct IrreducibleCore {
  Graph core;
  std::vector<Vertex> core_vertices;
  Labeling restricted_labeling;
};

inline IrreducibleCore irreducible_core(const Graph& g, const Labeling& lab) {
  if (!verify_feasible(g, lab)) {
    throw DomainError("irreducible_core needs a feasible labeling");
  }
  if (!is_reduced(lab)) {
    throw DomainError("irreducible_core needs a reduced labeling");
  }
  if (lab.max_label() != tree_depth_value(g)) {
    throw DomainError("irreducible_core needs an optimal labeling (max label = td)");
  }
  IrreducibleCore out;
  std::vector<int> restricted;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (lab.count(lab[v]) > 1) {
      out.core_vertices.push_back(v);
      restricted.push_back(lab[v]);
    }
  }
  out.core = induced_subgraph(g, out.core_vertices);
  out.restricted_labeling = Labeling(std::move(restricted));
  return out;
}

/// Standard labeling of the Andrasfai graph And(k): vertex 0 gets 1, positive
/// multiples of 3 get 2, and the remaining vertices get 2..2k in order.
inline Labeling standard_labeling_andrasfai(int k) {
  if (k < 1) {
    throw DomainError("Andrasfai graphs need k >= 1");
  }
  std::vector<int> labels(3 * k - 1);
  for (int x = 0; x < 3 * k - 1; ++x) {
    if (x == 0) {
      labels[x] = 1;
    } else if (x % 3 == 0) {
      labels[x] = 2;
    } else if (x % 3 == 1) {
      labels[x] = (2 * x + 4) / 3;
    } else {
      labels[x] = (2 * x + 5) / 3;
    }
  }
  return Labeling(std::move(labels));
}

enum class EnumerationStatus { Complete, BudgetExhausted };

struct LabelingEnumeration {
  std::vector<Labeling> labelings;
  EnumerationStatus status = EnumerationStatus::Complete;
};

namespace detail {

/// Backtracking over label arrays in lexicographic order. A partial
/// assignment is abandoned as soon as two assigned vertices with label c are
/// joined through assigned vertices labeled <= c, since no completion can
/// remove that path.
class FeasibleLabelingWalker {
 public:
  FeasibleLabelingWalker(const Graph& g, int max_label,
                         std::function<bool(const Labeling&)> visit)
      : g_(g), max_label_(max_label), visit_(std::move(visit)), labels_(g.order(), 0) {}

  // Returns false if the visitor asked to stop.
  bool run() { return descend(0, 0); }

 private:
  bool consistent(VertexMask assigned, int changed_label) const {
    for (int c = changed_label; c <= max_label_; ++c) {
      VertexMask upto = 0;
      VertexMask exact = 0;
      for_each_vertex(assigned, [&](Vertex v) {
        if (labels_[v] <= c) {
          upto |= bit(v);
        }
        if (labels_[v] == c) {
          exact |= bit(v);
        }
      });
      if (popcount(exact) < 2) {
        continue;
      }
      for (VertexMask comp : components(g_, upto)) {
        if (popcount(comp & exact) > 1) {
          return false;
        }
      }
    }
    return true;
  }

  bool descend(Vertex v, VertexMask assigned) {
    if (v == g_.order()) {
      return visit_(Labeling(labels_));
    }
    for (int c = 1; c <= max_label_; ++c) {
      labels_[v] = c;
      if (consistent(assigned | bit(v), c) && !descend(v + 1, assigned | bit(v))) {
        return false;
      }
    }
    labels_[v] = 0;
    return true;
  }

  const Graph& g_;
  int max_label_;
  std::function<bool(const Labeling&)> visit_;
  std::vector<int> labels_;
};

}  // namespace detail

/// Visits every feasible labeling with labels in 1..max_label in
/// lexicographic order until the visitor returns false. Returns false if
/// stopped early.
inline bool for_each_feasible_labeling(const Graph& g, int max_label,
                                       const std::function<bool(const Labeling&)>& visit) {
  return detail::FeasibleLabelingWalker(g, max_label, visit).run();
}

/// Feasible labelings drawn from 1..td(g), lexicographic, at most `budget`
/// of them. The status says whether the list is the whole set.
inline LabelingEnumeration enumerate_optimal_labelings(const Graph& g, std::size_t budget) {
  if (budget == 0) {
    throw DomainError("enumeration budget must be positive");
  }
  const int td = tree_depth_value(g);
  LabelingEnumeration out;
  for_each_feasible_labeling(g, td, [&](const Labeling& lab) {
    if (out.labelings.size() == budget) {
      out.status = EnumerationStatus::BudgetExhausted;
      return false;
    }
    out.labelings.push_back(lab);
    return true;
  });
  return out;
}

namespace detail {

/// Decides whether some optimal labeling gives v the label t and gives t to
/// no other vertex. Labels only matter through their order, so a subproblem
/// is described by how many values remain below t (`below_`, fixed) and above
/// t (`above`). In a connected piece holding v either v carries the piece's
/// maximum, or some other vertex does and may take the top remaining value.
class UniqueLabelSearch {
 public:
  UniqueLabelSearch(TreeDepthSolver& solver, Vertex v, int below)
      : solver_(solver), v_(v), below_(below) {}

  bool possible(TreeDepthSolver::Subset s, int above) {
    const Graph& g = solver_.graph();
    bool ok = true;
    for (VertexMask comp : components(g, s)) {
      const auto c = static_cast<TreeDepthSolver::Subset>(comp);
      if ((comp & bit(v_)) == 0) {
        ok = ok && solver_.at_most(c, below_ + above);
      } else {
        ok = ok && connected_possible(c, above);
      }
      if (!ok) {
        return false;
      }
    }
    return true;
  }

 private:
  bool connected_possible(TreeDepthSolver::Subset c, int above) {
    const std::uint64_t key = (static_cast<std::uint64_t>(c) << 6) | static_cast<std::uint64_t>(above);
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    const auto vbit = TreeDepthSolver::Subset{1} << v_;
    bool ok = solver_.at_most(c & ~vbit, below_);
    if (!ok && above > 0) {
      for (auto rest = c & ~vbit; rest != 0 && !ok; rest &= rest - 1) {
        const Vertex u = lowest(rest);
        ok = possible(c & ~(TreeDepthSolver::Subset{1} << u), above - 1);
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

  TreeDepthSolver& solver_;
  Vertex v_;
  int below_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace detail

/// Smallest t such that an optimal labeling (labels 1..td) gives v label t
/// and gives t to no other vertex; nullopt if no such t exists.
inline std::optional<int> t_uniqueness(const Graph& g, Vertex v, SolverOptions options = {}) {
  g.check_vertex(v);
  TreeDepthSolver solver(g, options);
  const int td = solver.tree_depth();
  for (int t = 1; t <= td; ++t) {
    detail::UniqueLabelSearch search(solver, v, t - 1);
    if (search.possible(solver.all(), td - t)) {
      return t;
    }
  }
  return std::nullopt;
}

/// t_uniqueness for every vertex, sharing one solver memo.
inline std::vector<std::optional<int>> min_unique_labels(const Graph& g, SolverOptions options = {}) {
  TreeDepthSolver solver(g, options);
  const int td = solver.tree_depth();
  std::vector<std::optional<int>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int t = 1; t <= td && !out[v]; ++t) {
      detail::UniqueLabelSearch search(solver, v, t - 1);
      if (search.possible(solver.all(), td - t)) {
        out[v] = t;
      }
    }
  }
  return out;
}

}  // namespace tdlab
