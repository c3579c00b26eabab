#include <gtest/gtest.h>

#include <numeric>

#include "k4bip/generators.hpp"
#include "k4bip/oracle.hpp"
#include "test_support.hpp"

namespace k4bip {
namespace {

TEST(ExactMaxCut, SmallGraphs) {
  auto c5 = exact_max_cut(cycle_graph(5));
  EXPECT_EQ(c5.max_cut, 4);
  EXPECT_EQ(c5.min_deletions, 1);

  auto t = exact_max_cut(complete_multipartite({3, 3, 3}));
  EXPECT_EQ(t.max_cut, 18);
  EXPECT_EQ(t.min_deletions, 9);

  auto o = exact_max_cut(complete_multipartite({2, 2, 2}));
  EXPECT_EQ(o.max_cut, 8);
  EXPECT_EQ(o.min_deletions, 4);

  EXPECT_EQ(exact_max_cut(empty_graph(0)).max_cut, 0);
  EXPECT_EQ(exact_max_cut(empty_graph(1)).max_cut, 0);
  EXPECT_EQ(exact_max_cut(complete_graph(2)).max_cut, 1);
}

TEST(ExactMaxCut, WitnessPinsVertexZeroAndIsValid) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_gnp(11, 0.5, seed);
    const auto r = exact_max_cut(g);
    EXPECT_EQ(r.witness.side[0], 0);
    EXPECT_EQ(testing::naive_cut(g, r.witness.side), r.max_cut);
    EXPECT_EQ(r.max_cut + r.min_deletions, g.edge_count());
    EXPECT_TRUE(is_bipartite(g.without_edges(r.witness.deletion_set)));
  }
}

TEST(ExactMaxCut, GrayCodeMatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const Graph g = random_gnp(rng.between(2, 12), rng.unit(), seed);
    EXPECT_EQ(exact_max_cut(g).max_cut, testing::naive_max_cut(g));
  }
}

TEST(ExactMaxCut, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_k4free_process(12, seed);
    std::vector<int> perm(12);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed + 1000);
    rng.shuffle(perm);
    EXPECT_EQ(exact_max_cut(g).max_cut, exact_max_cut(g.relabeled(perm)).max_cut);
  }
}

TEST(ExactMaxCut, CapacityCap) {
  EXPECT_THROW(exact_max_cut(empty_graph(29)), CapacityError);
  EXPECT_THROW(exact_max_cut(cycle_graph(6), 5), CapacityError);
  EXPECT_NO_THROW(exact_max_cut(cycle_graph(5), 5));
}

TEST(CompleteMultipartiteParts, Recognition) {
  EXPECT_EQ(complete_multipartite_parts(complete_multipartite({1, 3, 2})), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(complete_multipartite_parts(complete_graph(4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(complete_multipartite_parts(empty_graph(3)), (std::vector<int>{3}));
  EXPECT_FALSE(complete_multipartite_parts(cycle_graph(5)).has_value());
  EXPECT_FALSE(complete_multipartite_parts(from_edge_list(3, {{0, 1}})).has_value());
}

TEST(CanonicalCode, IsomorphismInvariant) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_gnp(6, 0.5, seed);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    EXPECT_EQ(canonical_code(g), canonical_code(g.relabeled(perm)));
    EXPECT_EQ(detail::decode_pair_code(6, canonical_code(g)).edge_count(), g.edge_count());
  }
  EXPECT_NE(canonical_code(cycle_graph(6)), canonical_code(complete_multipartite({3, 3})));
  EXPECT_THROW(canonical_code(empty_graph(8)), CapacityError);
}

TEST(ExhaustiveSweep, SmallOrders) {
  const auto s3 = exhaustive_theorem_sweep(3);
  EXPECT_EQ(s3.graphs, 8U);
  EXPECT_EQ(s3.k4_free, 8U);
  EXPECT_EQ(s3.violations, 0U);
  EXPECT_EQ(s3.max_min_deletions, 1);
  ASSERT_EQ(s3.maximizers.size(), 1U);
  EXPECT_EQ(s3.maximizers[0].multipartite_parts, (std::vector<int>{1, 1, 1}));

  const auto s4 = exhaustive_theorem_sweep(4);
  EXPECT_EQ(s4.k4_free, 63U);

  const auto s5 = exhaustive_theorem_sweep(5);
  EXPECT_EQ(s5.violations, 0U);
  EXPECT_EQ(s5.max_min_deletions, 2);
}

TEST(ExhaustiveSweep, OrderSixExtremalGraph) {
  const auto s = exhaustive_theorem_sweep(6);
  EXPECT_EQ(s.violations, 0U);
  EXPECT_EQ(s.max_min_deletions, 4);
  ASSERT_EQ(s.maximizers.size(), 1U);
  EXPECT_EQ(s.maximizers[0].multipartite_parts, (std::vector<int>{2, 2, 2}));
  // 6! / (2!^3 3!) labelings of K_{2,2,2}
  EXPECT_EQ(s.maximizers[0].labeled_count, 15);
  std::uint64_t total = 0;
  for (const auto& [d, c] : s.deletion_histogram) total += c;
  EXPECT_EQ(total, s.k4_free);
}

TEST(ExhaustiveSweep, RejectsOrder) {
  EXPECT_THROW(exhaustive_theorem_sweep(0), CapacityError);
  EXPECT_THROW(exhaustive_theorem_sweep(8), CapacityError);
}

}  // namespace
}  // namespace k4bip
