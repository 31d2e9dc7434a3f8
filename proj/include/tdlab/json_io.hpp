#pragma once

#include <nlohmann/json.hpp>

#include "tdlab/criticality.hpp"
#include "tdlab/io.hpp"
#include "tdlab/search.hpp"
#include "tdlab/solver.hpp"

namespace tdlab {

inline nlohmann::json to_json(const TreeDepthWitness& w) {
  return {{"td", w.value},
          {"labeling", w.labeling.values()},
          {"elimination_forest", w.parent}};
}

inline nlohmann::json to_json(const CriticalityReport& r) {
  nlohmann::json edges = nlohmann::json::array();
  for (const EdgeRef& e : r.edges) {
    edges.push_back({e.u, e.v});
  }
  nlohmann::json min_t = nlohmann::json::array();
  for (const auto& t : r.min_t) {
    min_t.push_back(t ? nlohmann::json(*t) : nlohmann::json(nullptr));
  }
  return {
      {"order", r.order},
      {"td", r.td},
      {"surplus", r.surplus},
      {"max_degree", r.max_degree},
      {"edges", edges},
      {"edge_deletion_deltas", r.edge_deletion_deltas},
      {"contraction_deltas", r.contraction_deltas},
      {"vertex_deletion_deltas", r.vertex_deletion_deltas},
      {"one_unique", r.one_unique},
      {"min_t", min_t},
      {"is_minor_critical", r.is_minor_critical},
      {"is_subgraph_critical", r.is_subgraph_critical},
      {"is_induced_subgraph_critical", r.is_induced_subgraph_critical},
      {"is_one_unique_graph", r.is_one_unique_graph},
      {"conjecture_checks",
       {{"order_at_most_2_pow_td_minus_1", r.conjecture_checks.order_bound},
        {"max_degree_at_most_td_minus_1", r.conjecture_checks.degree_bound}}},
  };
}

inline CriticalityReport report_from_json(const nlohmann::json& j) {
  CriticalityReport r;
  r.order = j.at("order").get<int>();
  r.td = j.at("td").get<int>();
  r.surplus = j.at("surplus").get<int>();
  r.max_degree = j.at("max_degree").get<int>();
  for (const auto& e : j.at("edges")) {
    r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  r.edge_deletion_deltas = j.at("edge_deletion_deltas").get<std::vector<int>>();
  r.contraction_deltas = j.at("contraction_deltas").get<std::vector<int>>();
  r.vertex_deletion_deltas = j.at("vertex_deletion_deltas").get<std::vector<int>>();
  r.one_unique = j.at("one_unique").get<std::vector<bool>>();
  for (const auto& t : j.at("min_t")) {
    r.min_t.push_back(t.is_null() ? std::nullopt : std::optional<int>(t.get<int>()));
  }
  r.is_minor_critical = j.at("is_minor_critical").get<bool>();
  r.is_subgraph_critical = j.at("is_subgraph_critical").get<bool>();
  r.is_induced_subgraph_critical = j.at("is_induced_subgraph_critical").get<bool>();
  r.is_one_unique_graph = j.at("is_one_unique_graph").get<bool>();
  const auto& checks = j.at("conjecture_checks");
  r.conjecture_checks.order_bound = checks.at("order_at_most_2_pow_td_minus_1").get<bool>();
  r.conjecture_checks.degree_bound = checks.at("max_degree_at_most_td_minus_1").get<bool>();
  return r;
}

inline nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json hits = nlohmann::json::array();
  for (const SearchHit& hit : result.hits) {
    hits.push_back({{"graph6", hit.canonical.graph6}, {"report", to_json(hit.report)}});
  }
  return {
      {"hits", hits},
      {"counters",
       {{"scanned", result.counters.scanned},
        {"at_target", result.counters.at_target},
        {"critical", result.counters.critical},
        {"counterexamples", result.counters.counterexamples},
        {"skipped", result.counters.skipped}}},
      {"provenance", {{"source", result.source}, {"config_hash", result.config_hash}}},
      {"complete", result.complete},
  };
}

}  // namespace tdlab
