#include <gtest/gtest.h>

#include <numeric>

#include "k4bip/generators.hpp"
#include "k4bip/harness.hpp"
#include "k4bip/regularity.hpp"

namespace k4bip {
namespace {

TEST(Density, Examples) {
  const Graph k33 = complete_multipartite({3, 3});
  const VertexSet a(6, {0, 1, 2}), b(6, {3, 4, 5});
  EXPECT_EQ(density(k33, a, b), Rational(1));
  EXPECT_EQ(density(empty_graph(6), a, b), Rational(0));
  const Graph one = from_edge_list(4, {{0, 2}});
  EXPECT_EQ(density(one, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})), ratio(1, 4));
}

TEST(IsEpsilonRegular, SingleEdgePair) {
  // A = {0,1}, B = {2,3}, one edge 0-2; X = {0}, Y = {2} has density 1 against 1/4
  const Graph g = from_edge_list(4, {{0, 2}});
  const VertexSet a(4, {0, 1}), b(4, {2, 3});
  const auto tight = is_epsilon_regular(g, a, b, ratio(2, 5));
  EXPECT_EQ(tight.verdict, Verdict::irregular);
  EXPECT_EQ(tight.witness_x, (std::vector<int>{0}));
  EXPECT_EQ(tight.witness_y, (std::vector<int>{2}));
  EXPECT_EQ(tight.witness_density, Rational(1));

  // at eps = 1/2 only X = A, Y = B qualify
  EXPECT_EQ(is_epsilon_regular(g, a, b, ratio(1, 2)).verdict, Verdict::regular);
  EXPECT_EQ(is_epsilon_regular(complete_multipartite({2, 2}), a, b, ratio(1, 10)).verdict, Verdict::regular);
}

TEST(IsEpsilonRegular, MatchesBruteForce) {
  const std::vector<Rational> epsilons{ratio(1, 10), ratio(1, 4), ratio(1, 3), ratio(1, 2), ratio(3, 4)};
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const int na = rng.between(1, 5), nb = rng.between(1, 6);
    const Graph g = random_gnp(na + nb, rng.unit(), rng.next());
    std::vector<int> a(static_cast<std::size_t>(na)), b(static_cast<std::size_t>(nb));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), na);
    const VertexSet as(na + nb, a), bs(na + nb, b);
    for (const Rational& eps : epsilons) {
      const auto r = is_epsilon_regular(g, as, bs, eps);
      EXPECT_EQ(r.counts_as_regular(), detail::brute_force_regular(g, a, b, eps)) << "seed " << seed;
      EXPECT_EQ(r.verdict, is_epsilon_regular(g, bs, as, eps).verdict);
      if (r.verdict == Verdict::irregular) {
        EXPECT_GE(abs(r.witness_density - r.density), eps);
        EXPECT_EQ(density(g, VertexSet(na + nb, r.witness_x), VertexSet(na + nb, r.witness_y)), r.witness_density);
      }
    }
  }
}

TEST(IsEpsilonRegular, MonotoneInEpsilon) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnp(8, 0.5, seed);
    const VertexSet a(8, {0, 1, 2, 3}), b(8, {4, 5, 6, 7});
    bool was_regular = false;
    for (int k = 1; k <= 10; ++k) {
      const bool regular = is_epsilon_regular(g, a, b, ratio(k, 10)).counts_as_regular();
      if (was_regular) {
        EXPECT_TRUE(regular);
      }
      was_regular = regular;
    }
  }
}

TEST(IsEpsilonRegular, SampledModeLabelsUncertifiedPairs) {
  const Graph g = complete_multipartite({20, 20});
  std::vector<int> a(20), b(20);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 20);
  const auto r = is_epsilon_regular(g, VertexSet(40, a), VertexSet(40, b), ratio(1, 10), RegularityMode::sampled, {100, 7});
  EXPECT_EQ(r.verdict, Verdict::sampled_regular);
  EXPECT_TRUE(r.counts_as_regular());
  EXPECT_EQ(r.mode, RegularityMode::sampled);
  // both sides beyond the cap
  EXPECT_THROW(is_epsilon_regular(g, VertexSet(40, a), VertexSet(40, b), ratio(1, 10)), CapacityError);
}

TEST(IsEpsilonRegular, SampledModeFindsPlantedIrregularity) {
  // half of A sees all of B, the other half sees nothing
  std::vector<Edge> edges;
  for (int u = 0; u < 5; ++u)
    for (int v = 10; v < 20; ++v) edges.push_back({u, v});
  const Graph g = Graph::from_edges(20, edges);
  std::vector<int> a(10), b(10);
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), 10);
  const auto r = is_epsilon_regular(g, VertexSet(20, a), VertexSet(20, b), ratio(1, 10), RegularityMode::sampled, {500, 3});
  EXPECT_EQ(r.verdict, Verdict::irregular);
  EXPECT_EQ(is_epsilon_regular(g, VertexSet(20, a), VertexSet(20, b), ratio(1, 10)).verdict, Verdict::irregular);
}

TEST(ReducedGraph, Blowups) {
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(reduced_graph(blowup(k3, 4), detail::natural_partition(3, 4, ratio(1, 10), ratio(1, 2))), k3);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(reduced_graph(blowup(c5, 3), detail::natural_partition(5, 3, ratio(1, 10), ratio(1, 2))), c5);
  EXPECT_EQ(reduced_graph(empty_graph(6), detail::natural_partition(3, 2, ratio(1, 10), ratio(1, 2))), empty_graph(3));
}

TEST(HFreeBipartize, Blowups) {
  const auto r = hfree_bipartize(blowup(complete_graph(3), 4), detail::natural_partition(3, 4, ratio(1, 10), ratio(1, 2)));
  EXPECT_EQ(r.certificate.edges.size(), 16U);
  EXPECT_EQ(r.lifted, 16);
  EXPECT_EQ(r.intra_class + r.irregular_pairs + r.sparse_pairs, 0);
  EXPECT_TRUE(r.within_accounting_bound);
  EXPECT_EQ(r.certificate.method, Method::regularity_lift);
  EXPECT_EQ(r.reduced_certificate.edges.size(), 1U);

  const auto c = hfree_bipartize(blowup(cycle_graph(5), 2), detail::natural_partition(5, 2, ratio(1, 10), ratio(1, 2)));
  EXPECT_EQ(c.certificate.edges.size(), 4U);
}

TEST(HFreeBipartize, BipartiteInputNeedsNothing) {
  const Graph g = complete_multipartite({3, 3});
  const auto r = hfree_bipartize(g, detail::natural_partition(2, 3, ratio(1, 10), ratio(1, 2)));
  EXPECT_TRUE(r.certificate.edges.empty());
}

TEST(HFreeBipartize, CountsEveryDeletionKind) {
  // classes {0,1} {2,3} {4,5}: an intra-class edge, a sparse pair and a dense pair
  const Graph g = from_edge_list(6, {{0, 1}, {0, 2}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
  const auto r = hfree_bipartize(g, detail::natural_partition(3, 2, ratio(1, 2), ratio(1, 2)));
  EXPECT_EQ(r.intra_class, 1);
  EXPECT_EQ(r.sparse_pairs, 1);
  EXPECT_EQ(r.lifted, 0);
  EXPECT_TRUE(verify_certificate(g, r.certificate));
}

TEST(HFreeBipartize, RejectsReducedK4) {
  EXPECT_THROW(hfree_bipartize(blowup(complete_graph(4), 2), detail::natural_partition(4, 2, ratio(1, 10), ratio(1, 2))), K4Error);
}

TEST(ValidatePartition, Errors) {
  const Graph g = empty_graph(4);
  Partition p;
  p.classes = {{0, 1}, {1, 2, 3}};
  EXPECT_THROW(validate_partition(g, p), InputError);
  p.classes = {{0, 1}, {2}};
  EXPECT_THROW(validate_partition(g, p), InputError);
  p.classes = {{0, 1}, {2, 4}};
  EXPECT_THROW(validate_partition(g, p), InputError);
  p.classes = {{0, 1, 2, 3}, {}};
  EXPECT_THROW(validate_partition(g, p), InputError);
  p.classes = {{0, 1}, {2, 3}};
  p.epsilon = 0;
  EXPECT_THROW(validate_partition(g, p), InputError);
  p.epsilon = ratio(1, 10);
  EXPECT_EQ(validate_partition(g, p).size(), 2U);
}

TEST(Partition, Equitable) {
  Partition p;
  p.classes = {{0, 1}, {2, 3, 4}};
  EXPECT_TRUE(p.is_equitable());
  p.classes = {{0}, {1, 2, 3}};
  EXPECT_FALSE(p.is_equitable());
}

}  // namespace
}  // namespace k4bip
