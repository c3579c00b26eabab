#include <gtest/gtest.h>

#include <numeric>

#include "k4bip/cut_engine.hpp"
#include "k4bip/generators.hpp"
#include "k4bip/graph.hpp"
#include "test_support.hpp"

namespace k4bip {
namespace {

TEST(FromEdgeList, CompleteTriangle) {
  Graph g = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(FromEdgeList, FiveCycle) {
  Graph g = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(g.edge_count(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(FromEdgeList, DuplicatesCollapse) {
  Graph g = from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(FromEdgeList, RejectsBadInput) {
  EXPECT_THROW(from_edge_list(3, {{0, 3}}), InputError);
  EXPECT_THROW(from_edge_list(3, {{-1, 2}}), InputError);
  EXPECT_THROW(from_edge_list(3, {{1, 1}}), InputError);
}

TEST(CommonNeighbors, Examples) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(common_neighbors(k4, 0, 1).to_vector(), (std::vector<int>{2, 3}));
  EXPECT_EQ(k4.codegree(2, 3), 2);

  EXPECT_TRUE(common_neighbors(cycle_graph(5), 0, 1).empty());

  // K_{3,3,3} with parts {0,1,2} {3,4,5} {6,7,8}: 0 and 3 share the third part
  Graph t = complete_multipartite({3, 3, 3});
  EXPECT_EQ(common_neighbors(t, 0, 3).to_vector(), (std::vector<int>{6, 7, 8}));
  EXPECT_THROW(common_neighbors(t, 2, 2), InputError);
}

TEST(Triangles, Counts) {
  EXPECT_EQ(triangles(complete_graph(4)).size(), 4U);
  EXPECT_EQ(triangles(cycle_graph(5)).size(), 0U);
  EXPECT_EQ(triangles(complete_multipartite({3, 3, 3})).size(), 27U);
  EXPECT_EQ(complete_multipartite({3, 3, 3}).triangle_count(), 27);
}

TEST(Triangles, ListedOnceInOrder) {
  auto list = triangles(complete_graph(5));
  ASSERT_EQ(list.size(), 10U);
  EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
  EXPECT_TRUE(std::adjacent_find(list.begin(), list.end()) == list.end());
  for (const auto& t : list) EXPECT_TRUE(t.u < t.v && t.v < t.w);
}

TEST(K4Free, Examples) {
  EXPECT_FALSE(is_k4_free(complete_graph(4)));
  EXPECT_TRUE(is_k4_free(complete_multipartite({3, 3, 3})));
  EXPECT_TRUE(is_k4_free(cycle_graph(5)));
  auto k = find_k4(complete_graph(5));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, (std::array<int, 4>{0, 1, 2, 3}));
}

TEST(K4Free, AgreesWithFourSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const int n = rng.between(4, 8);
    Graph g = random_gnp(n, 0.3 + 0.6 * rng.unit(), seed);
    ASSERT_EQ(is_k4_free(g), !testing::naive_has_k4(g)) << "seed " << seed;
  }
}

TEST(TuranCheck, Examples) {
  EXPECT_TRUE(turan_check(complete_multipartite({3, 3, 3})));
  const Graph t = complete_multipartite({3, 3, 3});
  EXPECT_EQ(3 * t.edge_count(), 81);  // equality case
  EXPECT_TRUE(turan_check(cycle_graph(5)));
  EXPECT_TRUE(turan_check(complete_graph(2)));
  EXPECT_THROW(turan_check(complete_graph(4)), K4Error);
}

TEST(GraphIdentities, DegreeAndNeighbourhoodSums) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = random_gnp(12, 0.5, seed);
    std::int64_t degree_sum = 0;
    std::int64_t ev_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto s = g.local_stats(v);
      degree_sum += s.degree;
      ev_sum += s.ev;
      EXPECT_LE(s.ev, static_cast<std::int64_t>(s.degree) * (s.degree - 1) / 2);
    }
    std::int64_t codegree_sum = 0;
    g.for_each_edge([&](int u, int v) { codegree_sum += g.codegree(u, v); });
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    EXPECT_EQ(ev_sum, 3 * testing::naive_triangles(g));
    EXPECT_EQ(codegree_sum, 3 * g.triangle_count());
    EXPECT_EQ(g.triangle_count(), testing::naive_triangles(g));
  }
}

TEST(GraphInvariants, SymmetricAndIrreflexive) {
  Graph g = random_gnp(70, 0.3, 9);  // spans two words per row
  std::int64_t row_sum = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    EXPECT_FALSE(g.adjacent(u, u));
    row_sum += g.neighbors(u).size();
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
  EXPECT_EQ(row_sum, 2 * g.edge_count());
}

TEST(GraphCopies, KeepCachedCounts) {
  Graph a = complete_multipartite({2, 2, 2});
  EXPECT_EQ(a.triangle_count(), 8);
  Graph b = a;
  EXPECT_EQ(b.triangle_count(), 8);
  EXPECT_EQ(a, b);
  Graph c = a.without_edges(std::vector<Edge>{{0, 2}});
  EXPECT_EQ(c.edge_count(), 11);
  EXPECT_EQ(c.triangle_count(), testing::naive_triangles(c));
}

TEST(TwoColoring, DetectsOddCycles) {
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(7)));
  EXPECT_TRUE(is_bipartite(empty_graph(3)));
  auto col = two_coloring(complete_multipartite({2, 3}));
  ASSERT_TRUE(col.has_value());
  EXPECT_NE((*col)[0], (*col)[2]);
}

}  // namespace
}  // namespace k4bip
