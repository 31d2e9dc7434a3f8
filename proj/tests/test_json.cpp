#include <gtest/gtest.h>

#include "tdlab/families.hpp"
#include "tdlab/json_io.hpp"

using namespace tdlab;

TEST(Json, WitnessShape) {
  const nlohmann::json j = to_json(tree_depth(families::path(3)));
  EXPECT_EQ(j.at("td"), 2);
  EXPECT_EQ(j.at("labeling"), nlohmann::json({1, 2, 1}));
  EXPECT_EQ(j.at("elimination_forest"), nlohmann::json({1, -1, 1}));
}

TEST(Json, ReportRoundTrip) {
  for (const Graph& g : {families::h_graph(4), families::path(5), families::cycle(5), Graph(1)}) {
    const CriticalityReport r = criticality_report(g);
    const nlohmann::json j = to_json(r);
    EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), r);
  }
}

TEST(Json, SearchResultShape) {
  SearchJob job;
  job.source = SearchSource::builtin(1, 4);
  job.td_target = 3;
  job.filters.critical = true;
  const nlohmann::json j = to_json(run_search(job));
  EXPECT_EQ(j.at("hits").size(), 2u);
  EXPECT_EQ(j.at("counters").at("scanned"), 18);
  EXPECT_EQ(j.at("provenance").at("source"), "builtin:n=1..4");
  EXPECT_EQ(j.at("provenance").at("config_hash"), job.config_hash());
  EXPECT_TRUE(j.at("complete").get<bool>());
}
