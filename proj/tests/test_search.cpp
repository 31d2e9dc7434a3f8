#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "tdlab/families.hpp"
#include "tdlab/search.hpp"

using namespace tdlab;

TEST(Enumerate, ClassCounts) {
  const std::vector<std::size_t> want{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n);
    EXPECT_EQ(graphs.size(), want[n - 1]) << n;
    std::set<CanonicalForm> forms;
    for (const Graph& g : graphs) {
      forms.insert(canonical_form(g));
    }
    EXPECT_EQ(forms.size(), graphs.size());
  }
  EXPECT_THROW(enumerate_graphs(8), DomainError);
  EXPECT_THROW(enumerate_graphs(0), DomainError);
}

namespace {

SearchJob critical_job(int max_order, int td) {
  SearchJob job;
  job.source = SearchSource::builtin(1, max_order);
  job.td_target = td;
  job.filters.critical = true;
  return job;
}

std::vector<std::string> hit_forms(const SearchResult& r) {
  std::vector<std::string> out;
  for (const SearchHit& h : r.hits) {
    out.push_back(h.canonical.graph6);
  }
  return out;
}

}  // namespace

TEST(Search, OnlyCliqueAtFullDepth) {
  const SearchResult r = run_search(critical_job(5, 5));
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(r.hits[0].canonical, canonical_form(families::complete(5)));
  EXPECT_EQ(r.counters.scanned, 1u + 2 + 4 + 11 + 34);
  EXPECT_EQ(r.counters.at_target, 1u);
  EXPECT_TRUE(r.complete);
}

TEST(Search, CriticalGraphsOfDepthThree) {
  // P4 and K3 are the only minor-critical graphs of tree-depth 3 up to 5 vertices
  const SearchResult r = run_search(critical_job(5, 3));
  const auto forms = hit_forms(r);
  const std::set<std::string> got(forms.begin(), forms.end());
  const std::set<std::string> want{canonical_form(families::path(4)).graph6,
                                   canonical_form(families::complete(3)).graph6};
  EXPECT_EQ(got, want);
  EXPECT_EQ(r.counters.counterexamples, 0u);
}

TEST(Search, ReportsReproduce) {
  const SearchResult r = run_search(critical_job(6, 4));
  ASSERT_FALSE(r.hits.empty());
  for (const SearchHit& h : r.hits) {
    EXPECT_EQ(criticality_report(parse_graph6(h.canonical.graph6)), h.report);
    EXPECT_TRUE(h.report.is_minor_critical);
    EXPECT_EQ(h.report.td, 4);
  }
}

TEST(Search, DedupAcrossDuplicateInputs) {
  const std::vector<Graph> graphs{families::cycle(5), relabel(families::cycle(5), std::vector<Vertex>{1, 3, 0, 4, 2}),
                                  families::complete(4)};
  SearchJob job = critical_job(5, 4);
  const SearchResult r = run_search(job, graphs);
  EXPECT_EQ(r.counters.scanned, 3u);
  EXPECT_EQ(r.counters.critical, 3u);
  EXPECT_EQ(r.hits.size(), 2u);
}

TEST(Search, StreamMatchesBuiltin) {
  const std::string path = ::testing::TempDir() + "tdlab_stream_test.g6";
  {
    std::ofstream out(path);
    out << ">>graph6<<\n";
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        out << to_graph6(g) << "\n";
      }
    }
  }
  SearchJob builtin = critical_job(6, 4);
  SearchJob stream = builtin;
  stream.source = SearchSource::stream(path);
  const SearchResult a = run_search(builtin);
  const SearchResult b = run_search(stream);
  EXPECT_EQ(hit_forms(a), hit_forms(b));
  EXPECT_EQ(a.counters, b.counters);
  EXPECT_NE(a.config_hash, b.config_hash);
  EXPECT_EQ(b.source, "graph6:" + path);
  std::remove(path.c_str());
}

TEST(Search, ThreadCountDoesNotChangeResult) {
  SearchJob one = critical_job(7, 5);
  SearchJob many = one;
  many.threads = 4;
  const SearchResult a = run_search(one);
  const SearchResult b = run_search(many);
  EXPECT_EQ(hit_forms(a), hit_forms(b));
  EXPECT_EQ(a.counters, b.counters);
  EXPECT_EQ(a.config_hash, b.config_hash);
}

TEST(Search, NonOneUniqueFilterAndConnectedOnly) {
  SearchJob job = critical_job(7, 5);
  job.filters.non_one_unique = true;
  const SearchResult all = run_search(job);
  job.filters.connected_only = true;
  const SearchResult connected = run_search(job);
  EXPECT_EQ(hit_forms(all), hit_forms(connected));
  ASSERT_FALSE(all.hits.empty());
  const auto found = hit_forms(all);
  EXPECT_NE(std::find(found.begin(), found.end(), canonical_form(families::h_graph(4)).graph6), found.end());
  for (const SearchHit& h : all.hits) {
    EXPECT_FALSE(h.report.is_one_unique_graph);
  }
}

TEST(Search, BudgetSkips) {
  SearchJob job = critical_job(5, 4);
  job.budget.max_states = 2;
  const SearchResult strict = run_search(job);
  EXPECT_GT(strict.counters.skipped, 0u);
  EXPECT_FALSE(strict.complete);
  job.allow_skips = true;
  EXPECT_TRUE(run_search(job).complete);
}

TEST(Search, ConfigHashIsStable) {
  const SearchJob job = critical_job(5, 4);
  EXPECT_EQ(job.config_hash().size(), 16u);
  EXPECT_EQ(job.config_hash(), critical_job(5, 4).config_hash());
  EXPECT_NE(job.config_hash(), critical_job(5, 3).config_hash());
  EXPECT_THROW(run_search(critical_job(5, 0)), DomainError);
}
