#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tdlab/canonical.hpp"
#include "tdlab/criticality.hpp"
#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"
#include "tdlab/io.hpp"
#include "tdlab/solver.hpp"

namespace tdlab {

inline constexpr int kMaxBuiltinOrder = 7;

/// Adds one vertex in every possible way to each graph and keeps one
/// representative per isomorphism class (canonically labeled, sorted by
/// canonical form). Every graph on m+1 vertices arises this way from its
/// own deletion of vertex m, so the classes are complete.
inline std::vector<Graph> next_order_classes(std::span<const Graph> classes) {
  std::set<CanonicalForm> seen;
  for (const Graph& g : classes) {
    const int n = g.order();
    for (VertexMask hood = 0; hood <= full_mask(n); ++hood) {
      std::vector<VertexMask> rows = g.rows();
      rows.push_back(hood);
      for_each_vertex(hood, [&](Vertex w) { rows[w] |= bit(n); });
      seen.insert(canonical_form(Graph::from_adjacency(std::move(rows))));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const CanonicalForm& form : seen) {
    out.push_back(parse_graph6(form.graph6));
  }
  return out;
}

/// One canonically labeled representative per isomorphism class of graphs on
/// n vertices, in canonical-form order.
inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxBuiltinOrder) {
    throw DomainError("built-in enumeration supports 1 <= n <= 7, got " + std::to_string(n));
  }
  std::vector<Graph> classes{Graph(1)};
  for (int m = 1; m < n; ++m) {
    classes = next_order_classes(classes);
  }
  return classes;
}

struct SearchFilters {
  bool critical = false;
  bool non_one_unique = false;
  bool connected_only = false;
};

struct SearchSource {
  enum class Kind { Builtin, Graph6Stream };
  Kind kind = Kind::Builtin;
  int min_order = 1;
  int max_order = 1;
  std::string path;

  static SearchSource builtin(int min_order, int max_order) {
    return SearchSource{Kind::Builtin, min_order, max_order, {}};
  }
  static SearchSource stream(std::string path) {
    return SearchSource{Kind::Graph6Stream, 0, 0, std::move(path)};
  }

  std::string descriptor() const {
    if (kind == Kind::Builtin) {
      return "builtin:n=" + std::to_string(min_order) + ".." + std::to_string(max_order);
    }
    return "graph6:" + path;
  }
};

inline std::vector<Graph> load_source(const SearchSource& source) {
  if (source.kind == SearchSource::Kind::Builtin) {
    if (source.min_order < 1 || source.max_order > kMaxBuiltinOrder ||
        source.min_order > source.max_order) {
      throw DomainError("built-in source needs 1 <= min <= max <= 7");
    }
    std::vector<Graph> out;
    for (int n = source.min_order; n <= source.max_order; ++n) {
      const auto classes = enumerate_graphs(n);
      out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
  }
  std::ifstream in(source.path);
  if (!in) {
    throw DomainError("cannot open graph6 stream '" + source.path + "'");
  }
  return read_graph6_stream(in);
}

struct SearchJob {
  SearchSource source;
  int td_target = 1;
  SearchFilters filters;
  SolverOptions budget;
  bool allow_skips = false;
  int threads = 1;

  /// Stable text form of everything that determines the result.
  std::string config_string() const {
    return source.descriptor() + ";td=" + std::to_string(td_target) +
           ";critical=" + std::to_string(filters.critical) +
           ";non_one_unique=" + std::to_string(filters.non_one_unique) +
           ";connected_only=" + std::to_string(filters.connected_only) +
           ";max_states=" + std::to_string(budget.max_states) +
           ";allow_skips=" + std::to_string(allow_skips);
  }

  std::string config_hash() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : config_string()) {
      h = (h ^ c) * 1099511628211ULL;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) {
      out[i] = kHex[h & 0xf];
    }
    return out;
  }
};

struct SearchHit {
  CanonicalForm canonical;
  CriticalityReport report;
};

struct SearchCounters {
  std::size_t scanned = 0;
  std::size_t at_target = 0;
  std::size_t critical = 0;
  std::size_t counterexamples = 0;
  std::size_t skipped = 0;

  SearchCounters& operator+=(const SearchCounters& o) {
    scanned += o.scanned;
    at_target += o.at_target;
    critical += o.critical;
    counterexamples += o.counterexamples;
    skipped += o.skipped;
    return *this;
  }

  friend bool operator==(const SearchCounters&, const SearchCounters&) = default;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchCounters counters;
  std::string source;
  std::string config_hash;
  /// False when graphs were skipped over budget and the job did not allow it.
  bool complete = true;
};

namespace detail {

struct ScreenOutcome {
  SearchCounters counters;
  std::optional<SearchHit> hit;
};

/// Orders at which the contraction shortcut is re-checked against the full
/// contraction scan on every screened graph.
inline constexpr int kShortcutCrossCheckOrder = 7;

inline ScreenOutcome screen(const Graph& g, const SearchJob& job) {
  ScreenOutcome out;
  out.counters.scanned = 1;
  if (job.filters.connected_only && !is_connected(g)) {
    return out;
  }
  const int k = job.td_target;
  try {
    if (g.order() == 0 || g.order() > kMaxCanonicalOrder) {
      throw BudgetError("search handles graphs with 1..10 vertices");
    }
    TreeDepthSolver solver(g, job.budget);
    if (!solver.at_most(k) || solver.at_most(k - 1)) {
      return out;
    }
    out.counters.at_target = 1;

    const bool critical = is_subgraph_critical(g, job.budget) &&
                          is_induced_subgraph_critical(g, job.budget) &&
                          is_minor_critical(g, true, job.budget);
    if (critical && g.order() <= kShortcutCrossCheckOrder &&
        !is_minor_critical(g, false, job.budget)) {
      throw std::logic_error("contraction shortcut disagrees with the full check on " + to_graph6(g));
    }
    const bool one_unique = is_one_unique(g, job.budget);
    out.counters.critical = critical ? 1 : 0;
    out.counters.counterexamples = critical && !one_unique ? 1 : 0;
    if ((job.filters.critical && !critical) || (job.filters.non_one_unique && one_unique)) {
      return out;
    }
    out.hit = SearchHit{canonical_form(g), criticality_report(g, job.budget)};
  } catch (const BudgetError&) {
    out.counters = SearchCounters{};
    out.counters.scanned = 1;
    out.counters.skipped = 1;
    out.hit.reset();
  }
  return out;
}

}  // namespace detail

/// Screens graphs in the order: tree-depth at the target (decision with
/// cutoff), edge-deletion criticality, vertex-deletion criticality,
/// contractions (1-unique shortcut), then 1-uniqueness. Workers take graphs
/// from a shared index; hits are merged by canonical form, so the result does
/// not depend on the thread count.
inline SearchResult run_search(const SearchJob& job, std::span<const Graph> graphs) {
  if (job.td_target < 1) {
    throw DomainError("search needs td_target >= 1");
  }
  if (job.threads < 1) {
    throw DomainError("search needs at least one thread");
  }
  std::vector<detail::ScreenOutcome> outcomes(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        outcomes[i] = detail::screen(graphs[i], job);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  const int pool = std::min<int>(job.threads, std::max<std::size_t>(1, graphs.size()));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < pool; ++t) {
      threads.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  SearchResult result;
  result.source = job.source.descriptor();
  result.config_hash = job.config_hash();
  std::map<CanonicalForm, SearchHit> hits;
  for (auto& outcome : outcomes) {
    result.counters += outcome.counters;
    if (outcome.hit) {
      hits.try_emplace(outcome.hit->canonical, std::move(*outcome.hit));
    }
  }
  for (auto& [form, hit] : hits) {
    result.hits.push_back(std::move(hit));
  }
  result.complete = result.counters.skipped == 0 || job.allow_skips;
  return result;
}

inline SearchResult run_search(const SearchJob& job) {
  const std::vector<Graph> graphs = load_source(job.source);
  return run_search(job, graphs);
}

}  // namespace tdlab
