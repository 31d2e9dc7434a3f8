#pragma once

#include <array>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tdlab/errors.hpp"
#include "tdlab/graph.hpp"
#include "tdlab/ops.hpp"

namespace tdlab {

namespace families {

inline void require(bool ok, const std::string& what) {
  if (!ok) {
    throw DomainError(what);
  }
}

inline Graph complete(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  std::vector<VertexMask> rows(n);
  for (Vertex v = 0; v < n; ++v) {
    rows[v] = full_mask(n) & ~bit(v);
  }
  return Graph::from_adjacency(std::move(rows));
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<EdgeRef> edges;
  for (Vertex v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
  }
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<EdgeRef> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, (v + 1) % n);
  }
  return Graph(n, edges);
}

inline Graph cycle_complement(int n) {
  require(n >= 3, "cycle complement needs n >= 3");
  return tdlab::complement(cycle(n));
}

/// G_{4k}: the complement of C_{4k} with the antipodal pairs {2j, 2j+2k},
/// j = 1..k, of the 1-based cycle added back as non-edges. Vertex i here is
/// cycle position i+1, so the removed edges are {2j-1, 2j-1+2k}.
inline Graph g4k(int k) {
  require(k >= 2, "G_{4k} needs k >= 2");
  const int n = 4 * k;
  const Graph base = cycle_complement(n);
  std::vector<VertexMask> rows = base.rows();
  for (int j = 1; j <= k; ++j) {
    const Vertex a = 2 * j - 1;
    const Vertex b = 2 * j - 1 + 2 * k;
    rows[a] &= ~bit(b);
    rows[b] &= ~bit(a);
  }
  return Graph::from_adjacency(std::move(rows));
}

/// K_k on 0..k-1 with pendant k+i attached to i.
inline Graph k_net(int k) {
  require(k >= 1, "k-net needs k >= 1");
  std::vector<EdgeRef> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) {
      edges.emplace_back(i, j);
    }
    edges.emplace_back(i, k + i);
  }
  return Graph(2 * k, edges);
}

/// K_a x K_2; vertex (i, side) is 2i + side.
inline Graph clique_prism(int a) {
  require(a >= 1, "clique prism needs a >= 1");
  return cartesian_product(complete(a), complete(2));
}

/// K_n with every edge at the hub subdivided once. Vertex 0 is the hub,
/// 1..n-1 are the subdivision vertices A, and n..2n-2 the clique B, with
/// i + n - 1 matched to i.
inline Graph h_graph(int n) {
  require(n >= 3, "H_n needs n >= 3");
  std::vector<EdgeRef> edges;
  for (Vertex i = 1; i < n; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i + n - 1);
    for (Vertex j = i + 1; j < n; ++j) {
      edges.emplace_back(i + n - 1, j + n - 1);
    }
  }
  return Graph(2 * n - 1, edges);
}

/// Vertices 0..3k-2, i > j adjacent iff i - j = 1 (mod 3).
inline Graph andrasfai(int k) {
  require(k >= 1, "Andrasfai graph needs k >= 1");
  const int n = 3 * k - 1;
  std::vector<EdgeRef> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if ((i - j) % 3 == 1) {
        edges.emplace_back(j, i);
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace families

enum class PatternId { TwoK1, ThreeK1, FourK1, TwoK2, TwoK2PlusK1, P3PlusK2, TwoK3 };

inline constexpr std::array<std::pair<PatternId, std::string_view>, 7> kPatternNames{{
    {PatternId::TwoK1, "2K1"},
    {PatternId::ThreeK1, "3K1"},
    {PatternId::FourK1, "4K1"},
    {PatternId::TwoK2, "2K2"},
    {PatternId::TwoK2PlusK1, "2K2+K1"},
    {PatternId::P3PlusK2, "P3+K2"},
    {PatternId::TwoK3, "2K3"},
}};

inline std::string_view pattern_name(PatternId id) {
  for (const auto& [pid, name] : kPatternNames) {
    if (pid == id) {
      return name;
    }
  }
  return "?";
}

/// Forbidden-subgraph patterns as fixed edge lists.
inline Graph pattern_graph(PatternId id) {
  switch (id) {
    case PatternId::TwoK1:
      return Graph(2);
    case PatternId::ThreeK1:
      return Graph(3);
    case PatternId::FourK1:
      return Graph(4);
    case PatternId::TwoK2:
      return Graph(4, {{0, 1}, {2, 3}});
    case PatternId::TwoK2PlusK1:
      return Graph(5, {{0, 1}, {2, 3}});
    case PatternId::P3PlusK2:
      return Graph(5, {{0, 1}, {1, 2}, {3, 4}});
    case PatternId::TwoK3:
      return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  }
  throw DomainError("unknown pattern id");
}

/// Minimal graphs with surplus k+1 for k = 0, 1, 2.
inline std::vector<PatternId> forbidden_list(int k) {
  switch (k) {
    case 0:
      return {PatternId::TwoK1};
    case 1:
      return {PatternId::ThreeK1, PatternId::TwoK2};
    case 2:
      return {PatternId::FourK1, PatternId::TwoK2PlusK1, PatternId::P3PlusK2, PatternId::TwoK3};
    default:
      throw DomainError("forbidden lists exist for k = 0, 1, 2 only");
  }
}

/// True iff g has no induced copy of any member of F_k.
inline bool fk_free(const Graph& g, int k) {
  for (PatternId id : forbidden_list(k)) {
    if (contains_induced(g, pattern_graph(id))) {
      return false;
    }
  }
  return true;
}

/// td(g) >= n(g) - k, read off the forbidden induced subgraphs alone.
inline bool high_td_by_forbidden(const Graph& g, int k) { return fk_free(g, k); }

enum class FamilyName {
  Complete,
  Cycle,
  Path,
  CycleComplement,
  G4k,
  KNet,
  CliquePrism,
  HGraph,
  Andrasfai,
  Pattern
};

inline constexpr std::array<std::pair<FamilyName, std::string_view>, 10> kFamilyNames{{
    {FamilyName::Complete, "complete"},
    {FamilyName::Cycle, "cycle"},
    {FamilyName::Path, "path"},
    {FamilyName::CycleComplement, "cycle_complement"},
    {FamilyName::G4k, "g4k"},
    {FamilyName::KNet, "k_net"},
    {FamilyName::CliquePrism, "clique_prism"},
    {FamilyName::HGraph, "h_graph"},
    {FamilyName::Andrasfai, "andrasfai"},
    {FamilyName::Pattern, "pattern"},
}};

struct FamilySpec {
  FamilyName name = FamilyName::Complete;
  int param = 0;
  PatternId pattern = PatternId::TwoK1;
};

/// Parses a family name and its argument: an integer parameter, or a pattern
/// id such as "2K2+K1" when the name is "pattern".
inline FamilySpec parse_family(std::string_view name, std::string_view arg) {
  FamilySpec spec;
  bool known = false;
  for (const auto& [id, text] : kFamilyNames) {
    if (text == name) {
      spec.name = id;
      known = true;
    }
  }
  if (!known) {
    throw ParseError("unknown family '" + std::string(name) + "'");
  }
  if (spec.name == FamilyName::Pattern) {
    for (const auto& [id, text] : kPatternNames) {
      if (text == arg) {
        spec.pattern = id;
        return spec;
      }
    }
    throw ParseError("unknown pattern '" + std::string(arg) + "'");
  }
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), spec.param);
  if (ec != std::errc{} || ptr != arg.data() + arg.size() || spec.param < 0) {
    throw ParseError("family parameter must be a non-negative integer, got '" + std::string(arg) + "'");
  }
  return spec;
}

inline Graph generate(const FamilySpec& spec) {
  switch (spec.name) {
    case FamilyName::Complete:
      return families::complete(spec.param);
    case FamilyName::Cycle:
      return families::cycle(spec.param);
    case FamilyName::Path:
      return families::path(spec.param);
    case FamilyName::CycleComplement:
      return families::cycle_complement(spec.param);
    case FamilyName::G4k:
      return families::g4k(spec.param);
    case FamilyName::KNet:
      return families::k_net(spec.param);
    case FamilyName::CliquePrism:
      return families::clique_prism(spec.param);
    case FamilyName::HGraph:
      return families::h_graph(spec.param);
    case FamilyName::Andrasfai:
      return families::andrasfai(spec.param);
    case FamilyName::Pattern:
      return pattern_graph(spec.pattern);
  }
  throw DomainError("unknown family");
}

}  // namespace tdlab
