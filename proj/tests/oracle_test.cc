// Cross-checks between the independent reference enumerations, so that a
// mistake in one of them cannot silently pass the library tests.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracle.h"

namespace {

using oracle::Mask;
using oracle::SmallGraph;

std::set<std::vector<Mask>> as_set(const std::vector<SmallGraph>& hs) {
  std::set<std::vector<Mask>> out;
  for (const SmallGraph& h : hs) out.insert(h.adj);
  return out;
}

TEST(Oracle, ExactTreewidthOfKnownFamilies) {
  EXPECT_EQ(oracle::exact_treewidth(oracle::path(6)), 1);
  EXPECT_EQ(oracle::exact_treewidth(oracle::cycle(7)), 2);
  EXPECT_EQ(oracle::exact_treewidth(oracle::complete(6)), 5);
  EXPECT_EQ(oracle::exact_treewidth(oracle::grid(3, 3)), 3);
  EXPECT_EQ(oracle::exact_treewidth(oracle::grid(4, 4)), 4);
  EXPECT_EQ(oracle::exact_treewidth(oracle::grid(2, 6)), 2);
  EXPECT_EQ(oracle::exact_treewidth(SmallGraph(3)), 0);
}

TEST(Oracle, TriangulationEnumerationsAgree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + trial % 4;
    SmallGraph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 5), rng);
    auto by_chords = as_set(oracle::minimal_triangulations_by_chords(g));
    auto by_orders = as_set(oracle::minimal_triangulations_by_orderings(g));
    auto by_seps = as_set(oracle::minimal_triangulations_by_separators(g));
    EXPECT_EQ(by_chords, by_orders);
    EXPECT_EQ(by_chords, by_seps);
  }
}

TEST(Oracle, OrderingAndSeparatorEnumerationsAgreeOnEight) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    SmallGraph g = oracle::random_connected_graph(8, 0.35, rng);
    EXPECT_EQ(as_set(oracle::minimal_triangulations_by_orderings(g)),
              as_set(oracle::minimal_triangulations_by_separators(g)));
  }
}

TEST(Oracle, TreewidthIsBestMinimalTriangulation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    SmallGraph g = oracle::random_connected_graph(9, 0.3, rng);
    int best = 100;
    for (const SmallGraph& h : oracle::minimal_triangulations_by_separators(g)) {
      EXPECT_TRUE(oracle::is_chordal(h));
      best = std::min(best, oracle::clique_width(h).k);
    }
    EXPECT_EQ(best, oracle::exact_treewidth(g));
  }
}

// No PMC contains another, and a chordal supergraph whose maximal cliques
// are all PMCs is a minimal triangulation. Together these make
// "decompositions over a PMC set" and "minimal triangulations with cliques
// in that set" the same thing, which width_over relies on.
TEST(Oracle, PmcFactsBehindWidthOver) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    SmallGraph g = oracle::random_connected_graph(6, 0.4, rng);
    std::set<Mask> pmcs = oracle::all_pmcs(g);
    for (Mask x : pmcs) {
      for (Mask y : pmcs) {
        if (x != y) EXPECT_NE(x & y, x);
      }
    }
    auto minimal = as_set(oracle::minimal_triangulations_by_chords(g));
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < g.n; ++u) {
      for (int v = u + 1; v < g.n; ++v) {
        if (!g.edge(u, v)) chords.emplace_back(u, v);
      }
    }
    for (size_t m = 0; m < (size_t{1} << chords.size()); ++m) {
      SmallGraph h = g;
      for (size_t i = 0; i < chords.size(); ++i) {
        if ((m >> i) & 1) h.add_edge(chords[i].first, chords[i].second);
      }
      if (!oracle::is_chordal(h)) continue;
      auto cliques = oracle::maximal_cliques(h);
      bool all_pmc = std::all_of(cliques.begin(), cliques.end(),
                                 [&](Mask c) { return pmcs.count(c) > 0; });
      EXPECT_EQ(all_pmc, minimal.count(h.adj) > 0);
    }
  }
}

TEST(Oracle, SeparatorsOfCycle) {
  // C5 has one minimal separator per pair of non-adjacent vertices.
  EXPECT_EQ(oracle::minimal_separators(oracle::cycle(5)).size(), 5u);
  EXPECT_TRUE(oracle::minimal_separators(oracle::complete(5)).empty());
}

}  // namespace
