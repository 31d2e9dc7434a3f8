#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tdlab/canonical.hpp"
#include "tdlab/criticality.hpp"
#include "tdlab/families.hpp"
#include "tdlab/labelings.hpp"
#include "tdlab/ops.hpp"
#include "tdlab/search.hpp"
#include "tdlab/solver.hpp"

namespace tdlab {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Full;
  /// graph6 file with the 8-vertex graphs; without it the (n-1)-critical
  /// sweep stops at the built-in 7-vertex enumeration.
  std::optional<std::string> order8_stream;
  int threads = 1;
};

/// One line of the verification ledger.
struct LedgerLine {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

inline std::string format_line(const LedgerLine& line) {
  std::ostringstream out;
  out << (line.pass ? "PASS" : "FAIL") << " [" << line.id << "] " << line.name
      << " | measured: " << line.measured << " | expected: " << line.expected << " | "
      << std::fixed;
  out.precision(2);
  out << line.seconds << "s";
  return out.str();
}

/// Erdos-Renyi style random graph with a fixed generator.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<EdgeRef> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

/// Every isomorphism class with 1..max_order vertices.
inline std::vector<Graph> all_graphs_up_to(int max_order) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_order; ++n) {
    const auto classes = enumerate_graphs(n);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

namespace detail {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i ? "," : "") << values[i];
  }
  out << ']';
  return out.str();
}

inline LedgerLine timed(int id, std::string name, const std::function<void(LedgerLine&)>& body) {
  LedgerLine line;
  line.id = id;
  line.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(line);
  line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return line;
}

inline bool full(VerifyLevel level) { return level == VerifyLevel::Full; }

/// Direct search for an optimal labeling that gives v the only label 1.
inline bool unique_one_by_enumeration(const Graph& g, Vertex v, int td) {
  bool found = false;
  for_each_feasible_labeling(g, td, [&](const Labeling& lab) {
    found = lab[v] == 1 && lab.count(1) == 1;
    return !found;
  });
  return found;
}

}  // namespace detail

inline LedgerLine check_andrasfai_tree_depth(VerifyLevel level) {
  const int top = detail::full(level) ? 5 : 4;
  return detail::timed(1, "td(And(k)) = 2k and td(And(k)-v) = 2k-1, k=1.." + std::to_string(top),
                       [&](LedgerLine& line) {
                         std::vector<int> whole, minus, want_whole, want_minus;
                         for (int k = 1; k <= top; ++k) {
                           const Graph g = families::andrasfai(k);
                           whole.push_back(tree_depth_value(g));
                           minus.push_back(tree_depth_value(delete_vertex(g, 0)));
                           want_whole.push_back(2 * k);
                           want_minus.push_back(2 * k - 1);
                         }
                         line.measured = detail::join(whole) + " / " + detail::join(minus);
                         line.expected = detail::join(want_whole) + " / " + detail::join(want_minus);
                         line.pass = whole == want_whole && minus == want_minus;
                       });
}

inline LedgerLine check_andrasfai_critical(VerifyLevel level) {
  const int top = detail::full(level) ? 4 : 3;
  return detail::timed(2, "And(k) and And(k)-v minor-critical and 1-unique, k=1.." + std::to_string(top),
                       [&](LedgerLine& line) {
                         int good = 0;
                         for (int k = 1; k <= top; ++k) {
                           const Graph g = families::andrasfai(k);
                           for (const Graph& h : {g, delete_vertex(g, 0)}) {
                             good += is_minor_critical(h, false) && is_one_unique(h) ? 1 : 0;
                           }
                         }
                         line.measured = std::to_string(good) + " of " + std::to_string(2 * top) + " graphs";
                         line.expected = std::to_string(2 * top) + " of " + std::to_string(2 * top) + " graphs";
                         line.pass = good == 2 * top;
                       });
}

inline LedgerLine check_cycle_complements(VerifyLevel level) {
  const int top = detail::full(level) ? 12 : 11;
  const std::vector<int> ks = detail::full(level) ? std::vector<int>{2, 3} : std::vector<int>{2};
  return detail::timed(
      3, "td(C_n complement) = n-1 and 1-unique, n=5.." + std::to_string(top) +
             "; G_4k spanning subgraph keeps td = 4k-1",
      [&](LedgerLine& line) {
        std::vector<int> tds, want;
        bool one_unique = true;
        for (int n = 5; n <= top; ++n) {
          const Graph g = families::cycle_complement(n);
          tds.push_back(tree_depth_value(g));
          want.push_back(n - 1);
          one_unique = one_unique && is_one_unique(g);
        }
        std::vector<int> g_tds, g_want;
        bool separated = true;
        for (int k : ks) {
          const Graph base = families::cycle_complement(4 * k);
          const Graph sub = families::g4k(k);
          g_tds.push_back(tree_depth_value(sub));
          g_want.push_back(4 * k - 1);
          const bool spanning = sub.order() == base.order() && sub.size() + k == base.size();
          bool contained = true;
          for (const EdgeRef& e : sub.edges()) {
            contained = contained && base.has_edge(e);
          }
          separated = separated && spanning && contained && !is_subgraph_critical(base);
        }
        line.measured = detail::join(tds) + (one_unique ? " all 1-unique" : " NOT all 1-unique") +
                        "; G_4k td " + detail::join(g_tds) +
                        (separated ? ", complements not subgraph-critical" : ", separation failed");
        line.expected = detail::join(want) + " all 1-unique; G_4k td " + detail::join(g_want) +
                        ", complements not subgraph-critical";
        line.pass = tds == want && one_unique && g_tds == g_want && separated;
      });
}

inline LedgerLine check_nets_and_prisms(VerifyLevel level) {
  const int nets = detail::full(level) ? 8 : 7;
  const int prisms = detail::full(level) ? 7 : 6;
  return detail::timed(4, "td(k-net) = k+1, k=1.." + std::to_string(nets) + "; td(K_a x K_2) = ceil(3a/2), a=1.." +
                              std::to_string(prisms),
                       [&](LedgerLine& line) {
                         std::vector<int> net_td, net_want, prism_td, prism_want;
                         for (int k = 1; k <= nets; ++k) {
                           net_td.push_back(tree_depth_value(families::k_net(k)));
                           net_want.push_back(k + 1);
                         }
                         for (int a = 1; a <= prisms; ++a) {
                           prism_td.push_back(tree_depth_value(families::clique_prism(a)));
                           prism_want.push_back((3 * a + 1) / 2);
                         }
                         line.measured = detail::join(net_td) + " / " + detail::join(prism_td);
                         line.expected = detail::join(net_want) + " / " + detail::join(prism_want);
                         line.pass = net_td == net_want && prism_td == prism_want;
                       });
}

inline LedgerLine check_h_graphs(VerifyLevel level) {
  const std::vector<int> ns = detail::full(level) ? std::vector<int>{4, 5, 6} : std::vector<int>{4, 5};
  return detail::timed(5, "H_n is (n+1)-critical with the hub as its only non-1-unique vertex, n=" + detail::join(ns),
                       [&](LedgerLine& line) {
                         std::vector<std::string> got, want;
                         for (int n : ns) {
                           const Graph g = families::h_graph(n);
                           const int td = tree_depth_value(g);
                           const bool critical = is_minor_critical(g, false);
                           const auto unique = one_unique_vertices(g);
                           std::vector<Vertex> non_unique;
                           for (Vertex v = 0; v < g.order(); ++v) {
                             if (std::find(unique.begin(), unique.end(), v) == unique.end()) {
                               non_unique.push_back(v);
                             }
                           }
                           got.push_back("td=" + std::to_string(td) + (critical ? " critical" : " not-critical") +
                                         " non1u=" + detail::join(non_unique));
                           want.push_back("td=" + std::to_string(n + 1) + " critical non1u=[0]");
                         }
                         line.measured = detail::join(got);
                         line.expected = detail::join(want);
                         line.pass = got == want;
                       });
}

inline LedgerLine check_forbidden_characterization(VerifyLevel level) {
  const int top = detail::full(level) ? 7 : 6;
  return detail::timed(6, "td(G) >= n-k iff F_k-free, k=0,1,2, all graphs n<=" + std::to_string(top),
                       [&](LedgerLine& line) {
                         std::size_t graphs = 0;
                         std::size_t mismatches = 0;
                         for (const Graph& g : all_graphs_up_to(top)) {
                           ++graphs;
                           const int td = tree_depth_value(g);
                           for (int k = 0; k <= 2; ++k) {
                             if ((td >= g.order() - k) != high_td_by_forbidden(g, k)) {
                               ++mismatches;
                             }
                           }
                         }
                         line.measured = std::to_string(mismatches) + " mismatches over " + std::to_string(graphs) + " graphs";
                         line.expected = "0 mismatches over " + std::to_string(graphs) + " graphs";
                         line.pass = mismatches == 0;
                       });
}

inline LedgerLine check_star_clique_equivalence(VerifyLevel level) {
  const int top = detail::full(level) ? 6 : 5;
  return detail::timed(7, "star-clique 1-uniqueness equals direct labeling search, all graphs n<=" + std::to_string(top),
                       [&](LedgerLine& line) {
                         std::size_t checked = 0;
                         std::size_t mismatches = 0;
                         for (const Graph& g : all_graphs_up_to(top)) {
                           const int td = tree_depth_value(g);
                           for (Vertex v = 0; v < g.order(); ++v) {
                             ++checked;
                             if (is_one_unique_vertex(g, v) != detail::unique_one_by_enumeration(g, v, td)) {
                               ++mismatches;
                             }
                           }
                         }
                         line.measured = std::to_string(mismatches) + " mismatches over " + std::to_string(checked) + " vertices";
                         line.expected = "0 mismatches over " + std::to_string(checked) + " vertices";
                         line.pass = mismatches == 0;
                       });
}

inline LedgerLine check_high_td_critical_one_unique(const VerifyOptions& options) {
  const int top = detail::full(options.level) ? 7 : 6;
  const bool with8 = detail::full(options.level) && options.order8_stream.has_value();
  return detail::timed(8, std::string("every (n-1)-critical graph is 1-unique, n<=") + (with8 ? "8" : std::to_string(top)),
                       [&](LedgerLine& line) {
                         std::vector<std::size_t> hits;
                         std::size_t bad = 0;
                         bool complete = true;
                         const auto sweep = [&](SearchSource source, int n) {
                           SearchJob job;
                           job.source = std::move(source);
                           job.td_target = n - 1;
                           job.filters.critical = true;
                           job.threads = options.threads;
                           const SearchResult result = run_search(job);
                           complete = complete && result.complete;
                           hits.push_back(result.hits.size());
                           for (const SearchHit& hit : result.hits) {
                             bad += hit.report.order == n && hit.report.is_one_unique_graph ? 0 : 1;
                           }
                         };
                         for (int n = 2; n <= top; ++n) {
                           sweep(SearchSource::builtin(n, n), n);
                         }
                         if (with8) {
                           sweep(SearchSource::stream(*options.order8_stream), 8);
                         }
                         line.measured = "critical hits per n from 2: " + detail::join(hits) + ", " +
                                         std::to_string(bad) + " not 1-unique" + (complete ? "" : ", INCOMPLETE");
                         line.expected = "0 not 1-unique";
                         line.pass = bad == 0 && complete;
                       });
}

inline LedgerLine check_non_one_unique_search(const VerifyOptions& options) {
  return detail::timed(9, "7-vertex search (td 5, critical, non-1-unique) finds H_4, one non-1-unique vertex per hit",
                       [&](LedgerLine& line) {
                         SearchJob job;
                         job.source = SearchSource::builtin(7, 7);
                         job.td_target = 5;
                         job.filters.critical = true;
                         job.filters.non_one_unique = true;
                         job.threads = options.threads;
                         const SearchResult all = run_search(job);
                         job.filters.connected_only = true;
                         const SearchResult connected = run_search(job);

                         const CanonicalForm h4 = canonical_form(families::h_graph(4));
                         bool has_h4 = false;
                         bool one_each = true;
                         bool degree_ok = true;
                         for (const SearchHit& hit : all.hits) {
                           has_h4 = has_h4 || hit.canonical == h4;
                           one_each = one_each && std::count(hit.report.one_unique.begin(),
                                                             hit.report.one_unique.end(), false) == 1;
                           degree_ok = degree_ok && hit.report.conjecture_checks.degree_bound;
                         }
                         bool same = all.hits.size() == connected.hits.size();
                         for (std::size_t i = 0; same && i < all.hits.size(); ++i) {
                           same = all.hits[i].canonical == connected.hits[i].canonical;
                         }
                         line.measured = std::to_string(all.hits.size()) + " hits" + (has_h4 ? ", contains H_4" : ", missing H_4") +
                                         (one_each ? ", one non-1-unique vertex each" : ", some hit has !=1 non-1-unique vertex") +
                                         (degree_ok ? ", degree bound holds" : ", degree bound violated") +
                                         (same ? ", connected-only identical" : ", connected-only differs");
                         line.expected = ">=1 hits, contains H_4, one non-1-unique vertex each, degree bound holds, connected-only identical";
                         line.pass = !all.hits.empty() && has_h4 && one_each && degree_ok && same && all.complete &&
                                     connected.complete;
                       });
}

inline LedgerLine check_property_suites(VerifyLevel level) {
  const bool big = detail::full(level);
  return detail::timed(10, "property suites: witnesses, reduced labelings, cores, surplus heredity, minor monotonicity, critical spanning subgraphs",
                       [&](LedgerLine& line) {
                         std::vector<std::string> failures;
                         const auto fail = [&](const std::string& what) {
                           if (failures.size() < 5) {
                             failures.push_back(what);
                           }
                         };
                         const auto graphs = all_graphs_up_to(big ? 7 : 6);
                         std::size_t failure_count = 0;
                         const auto expect = [&](bool ok, const std::string& what, const Graph& g) {
                           if (!ok) {
                             ++failure_count;
                             fail(what + " on " + to_graph6(g));
                           }
                         };

                         for (const Graph& g : graphs) {
                           const TreeDepthWitness w = tree_depth(g);
                           expect(verify_feasible(g, w.labeling).feasible && w.labeling.max_label() == w.value,
                                  "witness", g);
                           const Labeling reduced = reduce_labeling(g, w.labeling);
                           expect(is_reduced(reduced) && verify_feasible(g, reduced).feasible &&
                                      reduced.max_label() == w.value,
                                  "optimal reduced labeling", g);
                           const IrreducibleCore core = irreducible_core(g, reduced);
                           const int s = g.order() - w.value;
                           const int core_td = tree_depth_value(core.core);
                           const int core_s = core.core.order() - core_td;
                           bool shared = true;
                           for (int l : core.restricted_labeling.values()) {
                             shared = shared && core.restricted_labeling.count(l) >= 2;
                           }
                           expect(core_s == s && core_td <= core_s && shared, "irreducible core", g);
                         }

                         for (const Graph& g : all_graphs_up_to(big ? 6 : 5)) {
                           const int s = surplus(g);
                           for (VertexMask keep = 0; keep <= g.vertices(); ++keep) {
                             const Graph h = induced_subgraph(g, keep);
                             expect(surplus(h) <= s, "surplus heredity", g);
                           }
                         }

                         for (const Graph& g : all_graphs_up_to(big ? 6 : 5)) {
                           for_each_feasible_labeling(g, g.order(), [&](const Labeling& lab) {
                             const Labeling r = reduce_labeling(g, lab);
                             expect(verify_feasible(g, r).feasible && is_reduced(r) &&
                                        r.distinct_count() == lab.distinct_count(),
                                    "reduce_labeling contract", g);
                             return true;
                           });
                         }

                         std::mt19937_64 rng(20240611);
                         std::uniform_int_distribution<int> order(1, 9);
                         std::uniform_real_distribution<double> density(0.1, 0.9);
                         for (int i = 0; i < (big ? 500 : 150); ++i) {
                           const Graph g = random_graph(rng, order(rng), density(rng));
                           const int td = tree_depth_value(g);
                           for (Vertex v = 0; v < g.order(); ++v) {
                             const int drop = td - tree_depth_value(delete_vertex(g, v));
                             expect(drop == 0 || drop == 1, "vertex deletion drop", g);
                           }
                           for (const EdgeRef& e : g.edges()) {
                             expect(tree_depth_value(delete_edge(g, e)) <= td, "edge deletion monotone", g);
                             expect(tree_depth_value(contract_edge(g, e)) <= td, "contraction monotone", g);
                           }
                         }

                         std::size_t spanning = 0;
                         for (const Graph& g : graphs) {
                           if (!is_connected(g) || !is_one_unique(g)) {
                             continue;
                           }
                           ++spanning;
                           const CriticalSpanningSubgraph sub = greedy_critical_spanning_subgraph(g);
                           expect(tree_depth_value(sub.graph) == tree_depth_value(g) && is_minor_critical(sub.graph, false),
                                  "critical spanning subgraph", g);
                         }

                         line.measured = std::to_string(failure_count) + " failures" +
                                         (failures.empty() ? "" : " (" + detail::join(failures) + ")") + "; " +
                                         std::to_string(spanning) + " connected 1-unique graphs reduced to critical spanning subgraphs";
                         line.expected = "0 failures";
                         line.pass = failure_count == 0;
                       });
}

/// Runs every acceptance check and returns one ledger line per check.
inline std::vector<LedgerLine> verify_paper(const VerifyOptions& options) {
  return {
      check_andrasfai_tree_depth(options.level),
      check_andrasfai_critical(options.level),
      check_cycle_complements(options.level),
      check_nets_and_prisms(options.level),
      check_h_graphs(options.level),
      check_forbidden_characterization(options.level),
      check_star_clique_equivalence(options.level),
      check_high_td_critical_one_unique(options),
      check_non_one_unique_search(options),
      check_property_suites(options.level),
  };
}

}  // namespace tdlab
