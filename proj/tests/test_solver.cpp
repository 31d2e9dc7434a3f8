#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "tdlab/families.hpp"
#include "tdlab/solver.hpp"
#include "tdlab/verify.hpp"

using namespace tdlab;

TEST(Labeling, ParseAndFormat) {
  const Labeling lab = Labeling::parse_csv(" 3, 1 ,2\n");
  EXPECT_EQ(lab.values(), (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(lab.to_csv(), "3,1,2");
  EXPECT_EQ(lab.max_label(), 3);
  EXPECT_EQ(Labeling::parse_csv("2,2,1").distinct_count(), 2);
  EXPECT_THROW(Labeling::parse_csv("1,,2"), ParseError);
  EXPECT_THROW(Labeling::parse_csv("1,0"), ParseError);
  EXPECT_THROW(Labeling::parse_csv("1,x"), ParseError);
  EXPECT_THROW(Labeling({1, -1}), DomainError);
}

TEST(Feasibility, ReportsSmallestViolation) {
  const Graph p3 = families::path(3);
  EXPECT_TRUE(verify_feasible(p3, Labeling({1, 2, 1})));
  const FeasibilityResult bad = verify_feasible(p3, Labeling({1, 1, 2}));
  ASSERT_FALSE(bad);
  ASSERT_TRUE(bad.violation);
  EXPECT_EQ(bad.violation->label, 1);
  EXPECT_EQ(bad.violation->u, 0);
  EXPECT_EQ(bad.violation->v, 1);
  // 0 and 2 share 2 through vertex 1 labeled 1; 1 and 3 share 1 only through 2.
  const FeasibilityResult both = verify_feasible(families::path(4), Labeling({2, 1, 2, 1}));
  ASSERT_TRUE(both.violation);
  EXPECT_EQ(both.violation->label, 2);
  EXPECT_EQ(both.violation->u, 0);
  EXPECT_EQ(both.violation->v, 2);
  EXPECT_THROW(verify_feasible(p3, Labeling({1, 2})), DomainError);
}

TEST(Feasibility, AgreesWithPathOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, 0.5);
    std::vector<int> labels(n);
    for (int& l : labels) {
      l = 1 + static_cast<int>(rng() % 4);
    }
    ASSERT_EQ(static_cast<bool>(verify_feasible(g, Labeling(labels))), oracle::feasible(g, labels))
        << to_graph6(g);
  }
}

TEST(Solver, KnownValues) {
  EXPECT_EQ(tree_depth_value(Graph(0)), 0);
  EXPECT_EQ(tree_depth_value(Graph(3)), 1);
  EXPECT_EQ(tree_depth_value(families::complete(6)), 6);
  EXPECT_EQ(tree_depth_value(families::path(4)), 3);
  EXPECT_EQ(tree_depth_value(families::path(7)), 3);
  EXPECT_EQ(tree_depth_value(families::path(8)), 4);
  EXPECT_EQ(tree_depth_value(families::cycle(5)), 4);
  EXPECT_EQ(tree_depth_value(parse_graph6("D?{")), 2);
  EXPECT_EQ(surplus(families::cycle(5)), 1);
  EXPECT_TRUE(tree_depth_decision(families::path(7), 3));
  EXPECT_FALSE(tree_depth_decision(families::path(8), 3));
}

TEST(Solver, MatchesOracleOnAllSmallGraphs) {
  for (const Graph& g : all_graphs_up_to(6)) {
    const TreeDepthWitness w = tree_depth(g);
    ASSERT_EQ(w.value, oracle::tree_depth(g)) << to_graph6(g);
    ASSERT_EQ(w.value, oracle::tree_depth_by_labelings(g)) << to_graph6(g);
    ASSERT_TRUE(verify_feasible(g, w.labeling)) << to_graph6(g);
    ASSERT_EQ(w.labeling.max_label(), w.value);
  }
}

TEST(Solver, ComponentRule) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    const Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.5);
    ASSERT_EQ(tree_depth_value(disjoint_union(a, b)), std::max(tree_depth_value(a), tree_depth_value(b)));
  }
}

TEST(Solver, WitnessForestIsConsistent) {
  const Graph g = families::andrasfai(3);
  const TreeDepthWitness w = tree_depth(g);
  EXPECT_EQ(w.value, 6);
  ASSERT_EQ(w.parent.size(), 8u);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (w.parent[v] >= 0) {
      EXPECT_GT(w.labeling[w.parent[v]], w.labeling[v]);
    }
  }
  // every edge joins an ancestor and a descendant
  for (const EdgeRef& e : g.edges()) {
    const auto is_ancestor = [&](Vertex a, Vertex d) {
      for (Vertex x = w.parent[d]; x >= 0; x = w.parent[x]) {
        if (x == a) {
          return true;
        }
      }
      return false;
    };
    EXPECT_TRUE(is_ancestor(e.u, e.v) || is_ancestor(e.v, e.u));
  }
}

TEST(Solver, Deterministic) {
  const Graph g = families::cycle_complement(9);
  const TreeDepthWitness a = tree_depth(g);
  const TreeDepthWitness b = tree_depth(g);
  EXPECT_EQ(a.labeling, b.labeling);
  EXPECT_EQ(a.parent, b.parent);
}

TEST(Solver, CapsAndBudget) {
  EXPECT_THROW(tree_depth_value(Graph(26)), BudgetError);
  EXPECT_THROW(tree_depth_value(families::path(20), SolverOptions{5}), BudgetError);
  EXPECT_EQ(tree_depth_value(families::path(20), SolverOptions{100000}), 5);
}

TEST(Solver, SubsetQueries) {
  TreeDepthSolver solver(families::path(8));
  EXPECT_EQ(solver.tree_depth(), 4);
  EXPECT_EQ(solver.tree_depth(0b1111), 3);
  EXPECT_TRUE(solver.at_most(0b111, 2));
  EXPECT_FALSE(solver.at_most(0b111, 1));
  EXPECT_FALSE(solver.at_most(0, -1));
  EXPECT_GT(solver.states(), 0u);
}
