#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "tdlab/criticality.hpp"
#include "tdlab/families.hpp"
#include "tdlab/verify.hpp"

using namespace tdlab;

TEST(OneUnique, StarCliqueMatchesEnumeration) {
  for (const Graph& g : all_graphs_up_to(5)) {
    const int td = tree_depth_value(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      ASSERT_EQ(is_one_unique_vertex(g, v), oracle::t_uniqueness(g, v) == 1) << to_graph6(g) << " v=" << v;
      ASSERT_EQ(is_one_unique_vertex(g, v), detail::unique_one_by_enumeration(g, v, td));
    }
  }
}

TEST(OneUnique, HGraphHub) {
  const Graph h4 = families::h_graph(4);
  EXPECT_EQ(one_unique_vertices(h4), (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(is_one_unique(h4));
  EXPECT_TRUE(is_one_unique(families::complete(4)));
  EXPECT_TRUE(is_one_unique(families::cycle(5)));
}

TEST(Criticality, SmallExamples) {
  EXPECT_TRUE(is_minor_critical(Graph(1), true));
  EXPECT_TRUE(is_minor_critical(families::complete(5), true));
  EXPECT_TRUE(is_minor_critical(families::cycle(5), false));
  EXPECT_TRUE(is_minor_critical(families::path(4), true));
  EXPECT_FALSE(is_minor_critical(families::path(5), true));
  EXPECT_FALSE(is_minor_critical(families::cycle_complement(10), true));
  EXPECT_TRUE(is_subgraph_critical(Graph(2)));
  EXPECT_FALSE(is_induced_subgraph_critical(Graph(2)));
  EXPECT_TRUE(is_induced_subgraph_critical(families::cycle(4)));
  EXPECT_FALSE(is_subgraph_critical(families::cycle(4)));
  EXPECT_THROW(is_minor_critical(Graph(0), true), DomainError);
}

TEST(Criticality, ShortcutAgreesWithFullScan) {
  for (const Graph& g : all_graphs_up_to(6)) {
    ASSERT_EQ(is_minor_critical(g, true), is_minor_critical(g, false)) << to_graph6(g);
  }
}

TEST(Report, HGraph) {
  const CriticalityReport r = criticality_report(families::h_graph(4));
  EXPECT_EQ(r.order, 7);
  EXPECT_EQ(r.td, 5);
  EXPECT_EQ(r.surplus, 2);
  EXPECT_EQ(r.max_degree, 3);
  EXPECT_EQ(r.edges.size(), 9u);
  EXPECT_TRUE(r.is_minor_critical);
  EXPECT_TRUE(r.is_subgraph_critical);
  EXPECT_TRUE(r.is_induced_subgraph_critical);
  EXPECT_FALSE(r.is_one_unique_graph);
  EXPECT_EQ(r.one_unique, (std::vector<bool>{false, true, true, true, true, true, true}));
  EXPECT_EQ(r.min_t[0], 2);
  EXPECT_TRUE(r.conjecture_checks.order_bound);
  EXPECT_TRUE(r.conjecture_checks.degree_bound);
  for (int d : r.contraction_deltas) {
    EXPECT_EQ(d, 1);
  }
}

TEST(Report, NonCriticalDeltas) {
  const CriticalityReport r = criticality_report(families::path(5));
  EXPECT_EQ(r.td, 3);
  EXPECT_EQ(r.edge_deletion_deltas, (std::vector<int>{0, 1, 1, 0}));
  EXPECT_EQ(r.vertex_deletion_deltas, (std::vector<int>{0, 1, 1, 1, 0}));
  EXPECT_EQ(r.contraction_deltas, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_FALSE(r.is_minor_critical);
  EXPECT_FALSE(r.is_subgraph_critical);
  EXPECT_TRUE(r.conjecture_checks.degree_bound);
  EXPECT_FALSE(r.conjecture_checks.order_bound);
}

TEST(SpanningSubgraph, GreedyReachesCritical) {
  const Graph k4 = families::complete(4);
  const CriticalSpanningSubgraph same = greedy_critical_spanning_subgraph(k4);
  EXPECT_EQ(same.graph, k4);
  EXPECT_TRUE(same.removed.empty());

  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  const CriticalSpanningSubgraph out = greedy_critical_spanning_subgraph(g);
  EXPECT_EQ(tree_depth_value(out.graph), tree_depth_value(g));
  EXPECT_TRUE(is_subgraph_critical(out.graph));
  EXPECT_EQ(out.graph.size() + out.removed.size(), g.size());
}
