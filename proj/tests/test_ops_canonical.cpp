#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "tdlab/canonical.hpp"
#include "tdlab/families.hpp"
#include "tdlab/ops.hpp"
#include "tdlab/verify.hpp"

using namespace tdlab;

TEST(Ops, InducedSubgraphRenumbers) {
  const Graph p5 = families::path(5);
  const std::vector<Vertex> keep{1, 2, 4};
  EXPECT_EQ(induced_subgraph(p5, keep), Graph(3, {{0, 1}}));
  EXPECT_EQ(delete_vertex(p5, 2), Graph(4, {{0, 1}, {2, 3}}));
}

TEST(Ops, DeleteAndContractEdge) {
  const Graph c4 = families::cycle(4);
  EXPECT_EQ(delete_edge(c4, {3, 0}), families::path(4));
  EXPECT_EQ(contract_edge(c4, {0, 1}), families::cycle(3));
  EXPECT_THROW(delete_edge(c4, {0, 2}), DomainError);
  EXPECT_THROW(contract_edge(c4, {0, 2}), DomainError);
  // merged vertex takes slot 1; 3 and 4 shift down
  const Graph g(5, {{1, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(contract_edge(g, {1, 3}), Graph(4, {{1, 3}, {0, 3}}));
}

TEST(Ops, StarCliqueTransform) {
  const Graph star = parse_graph6("D?{");
  EXPECT_EQ(star_clique_transform(star, 4), families::complete(4));
  EXPECT_EQ(star_clique_transform(star, 0), Graph(4, {{0, 3}, {1, 3}, {2, 3}}));
}

TEST(Ops, ComplementUnionProduct) {
  EXPECT_EQ(complement(families::complete(4)), Graph(4));
  const Graph u = disjoint_union(families::complete(2), families::path(3));
  EXPECT_EQ(u, Graph(5, {{0, 1}, {2, 3}, {3, 4}}));
  const Graph prism = cartesian_product(families::complete(3), families::complete(2));
  EXPECT_EQ(prism.order(), 6);
  EXPECT_EQ(prism.size(), 9u);
  EXPECT_TRUE(prism.adjacent(0, 1));
  EXPECT_TRUE(prism.adjacent(0, 2));
  EXPECT_FALSE(prism.adjacent(0, 3));
}

TEST(Ops, Relabel) {
  const std::vector<Vertex> perm{2, 0, 1};
  EXPECT_EQ(relabel(Graph(3, {{0, 1}}), perm), Graph(3, {{0, 2}}));
  const std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(relabel(Graph(3), bad), DomainError);
}

TEST(Ops, VertexConnectivity) {
  EXPECT_EQ(vertex_connectivity(families::complete(5)), 4);
  EXPECT_EQ(vertex_connectivity(families::cycle(6)), 2);
  EXPECT_EQ(vertex_connectivity(families::path(4)), 1);
  EXPECT_EQ(vertex_connectivity(Graph(3, {{0, 1}})), 0);
  EXPECT_EQ(vertex_connectivity(families::andrasfai(3)), 3);
  EXPECT_THROW(vertex_connectivity(Graph(0)), DomainError);
}

TEST(Ops, ContainsInduced) {
  const Graph c5 = families::cycle(5);
  EXPECT_TRUE(contains_induced(c5, families::path(4)));
  EXPECT_FALSE(contains_induced(c5, families::cycle(4)));
  EXPECT_TRUE(contains_induced(c5, Graph(2)));
  EXPECT_FALSE(contains_induced(c5, Graph(3)));
}

namespace {

bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    return false;
  }
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph from_code(int n, unsigned code) {
  std::vector<EdgeRef> edges;
  int k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) {
      if ((code >> k) & 1U) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 0.45);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ASSERT_EQ(canonical_form(g), canonical_form(relabel(g, perm))) << to_graph6(g);
  }
}

TEST(Canonical, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph a = random_graph(rng, n, 0.5);
    const Graph b = random_graph(rng, n, 0.5);
    ASSERT_EQ(is_isomorphic(a, b), isomorphic_by_permutations(a, b))
        << to_graph6(a) << " " << to_graph6(b);
  }
}

TEST(Canonical, CountsLabeledGraphClasses) {
  for (const auto& [n, classes] : {std::pair{4, 11u}, std::pair{5, 34u}, std::pair{6, 156u}}) {
    std::set<CanonicalForm> seen;
    const unsigned total = 1U << (n * (n - 1) / 2);
    for (unsigned code = 0; code < total; ++code) {
      seen.insert(canonical_form(from_code(n, code)));
    }
    EXPECT_EQ(seen.size(), classes) << "n=" << n;
  }
  EXPECT_THROW(canonical_form(Graph(11)), DomainError);
}

TEST(Examples, AndrasfaiVertexDeletionsAreIsomorphic) {
  const Graph a3 = families::andrasfai(3);
  EXPECT_TRUE(is_isomorphic(delete_vertex(a3, 0), delete_vertex(a3, 5)));
  for (int j = 1; j <= 3; ++j) {
    const Graph bigger = families::andrasfai(j + 1);
    std::vector<Vertex> prefix(3 * j - 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    EXPECT_TRUE(is_isomorphic(induced_subgraph(bigger, prefix), families::andrasfai(j))) << j;
  }
}

TEST(Examples, HGraphMinors) {
  EXPECT_TRUE(is_isomorphic(delete_vertex(families::h_graph(4), 0), families::k_net(3)));
  EXPECT_TRUE(is_isomorphic(star_clique_transform(families::h_graph(4), 0), families::clique_prism(3)));
  EXPECT_TRUE(is_isomorphic(star_clique_transform(families::h_graph(5), 0), families::clique_prism(4)));
  EXPECT_TRUE(is_isomorphic(families::clique_prism(3), families::cycle_complement(6)));
}
