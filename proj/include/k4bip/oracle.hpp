#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "k4bip/cut_engine.hpp"
#include "k4bip/errors.hpp"
#include "k4bip/graph.hpp"

namespace k4bip {

inline constexpr int kDefaultOracleLimit = 28;

struct OracleResult {
  std::int64_t max_cut = 0;
  std::int64_t min_deletions = 0;
  Bipartition witness;
};

namespace detail {

/// Max cut of a graph given as adjacency masks (n <= 63), vertex 0 pinned to
/// side 0. Assignments are walked in Gray-code order; among maximizers the
/// smallest side-1 mask is reported.
inline std::pair<std::int64_t, std::uint64_t> max_cut_masks(std::span<const std::uint64_t> adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 1) return {0, 0};
  std::uint64_t side1 = 0;
  std::int64_t cut = 0;
  std::int64_t best = 0;
  std::uint64_t best_mask = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int x = std::countr_zero(i) + 1;
    const std::uint64_t bit = std::uint64_t{1} << x;
    const std::uint64_t nb = adj[static_cast<std::size_t>(x)];
    const int on_side1 = std::popcount(nb & side1);
    const int on_side0 = std::popcount(nb) - on_side1;
    // moving x across turns its same-side edges into cut edges and vice versa
    if (side1 & bit)
      cut += on_side1 - on_side0;
    else
      cut += on_side0 - on_side1;
    side1 ^= bit;
    if (cut > best || (cut == best && side1 < best_mask)) {
      best = cut;
      best_mask = side1;
    }
  }
  return {best, best_mask};
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  g.for_each_edge([&](int u, int v) {
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  });
  return adj;
}

}  // namespace detail

/// Exact maximum cut by enumerating all 2^(n-1) assignments.
inline OracleResult exact_max_cut(const Graph& g, int limit = kDefaultOracleLimit) {
  const int n = g.vertex_count();
  if (n > limit || n > 63)
    throw CapacityError("exact_max_cut: n=" + std::to_string(n) + " exceeds the vertex cap " +
                        std::to_string(std::min(limit, 63)));
  const auto adj = detail::adjacency_masks(g);
  const auto [best, mask] = detail::max_cut_masks(adj);
  std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = (mask >> v) & 1U;
  OracleResult r{best, g.edge_count() - best, make_bipartition(g, std::move(side))};
  if (r.witness.cut_value != best) throw TheoremViolation("oracle witness disagrees with the enumerated optimum");
  return r;
}

/// Parts of g if it is complete multipartite (non-adjacency is an equivalence
/// relation), sorted descending; nullopt otherwise.
inline std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    VertexSet cls = g.neighbors(v).complement();
    int count = 0;
    bool ok = true;
    cls.for_each([&](int u) {
      if (part[static_cast<std::size_t>(u)] >= 0) ok = false;
      part[static_cast<std::size_t>(u)] = id;
      ++count;
    });
    if (!ok || g.edges_inside(cls) != 0) return std::nullopt;
    sizes.push_back(count);
  }
  // every cross-class pair must be an edge
  std::int64_t expected = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) expected += static_cast<std::int64_t>(sizes[i]) * sizes[j];
  if (expected != g.edge_count()) return std::nullopt;
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

inline constexpr int kMaxSweepOrder = 7;

struct ExtremalClass {
  std::uint64_t canonical_code = 0;  // minimum pair-code over all relabellings
  Graph representative;              // decoded from canonical_code
  std::int64_t labeled_count = 0;
  std::optional<std::vector<int>> multipartite_parts;
};

struct SweepReport {
  int n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t k4_free = 0;
  std::uint64_t violations = 0;  // K4-free graphs with 9 min_deletions > n^2
  std::int64_t max_min_deletions = 0;
  std::map<std::int64_t, std::uint64_t> deletion_histogram;  // min_deletions -> K4-free graph count
  std::vector<ExtremalClass> maximizers;                      // up to isomorphism, by canonical code
};

namespace detail {

inline std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline Graph decode_pair_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  const auto pairs = pair_order(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((code >> k) & 1U) edges.push_back({pairs[k].first, pairs[k].second});
  return Graph::from_edges(n, edges);
}

}  // namespace detail

/// Canonical form: minimum pair-code over all vertex permutations (n <= kMaxSweepOrder).
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxSweepOrder) throw CapacityError("canonical_code supports n <= 7");
  const auto pairs = detail::pair_order(n);
  const auto adj = detail::adjacency_masks(g);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[k].first)])] >>
           perm[static_cast<std::size_t>(pairs[k].second)]) & 1U)
        code |= std::uint64_t{1} << k;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Every labelled graph on n vertices: filters K4-free ones, checks
/// 9 min_deletions <= n^2, and classifies the maximizers of min_deletions.
inline SweepReport exhaustive_theorem_sweep(int n) {
  if (n < 1 || n > kMaxSweepOrder) throw CapacityError("exhaustive_theorem_sweep supports 1 <= n <= 7");
  const auto pairs = detail::pair_order(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  SweepReport rep;
  rep.n = n;
  rep.graphs = total;
  std::vector<std::uint64_t> argmax;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::fill(adj.begin(), adj.end(), 0);
    int e = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((code >> k) & 1U) {
        adj[static_cast<std::size_t>(pairs[k].first)] |= std::uint64_t{1} << pairs[k].second;
        adj[static_cast<std::size_t>(pairs[k].second)] |= std::uint64_t{1} << pairs[k].first;
        ++e;
      }
    bool has_k4 = false;
    for (std::size_t k = 0; k < pairs.size() && !has_k4; ++k) {
      if (!((code >> k) & 1U)) continue;
      std::uint64_t common = adj[static_cast<std::size_t>(pairs[k].first)] & adj[static_cast<std::size_t>(pairs[k].second)];
      for (std::uint64_t c = common; c != 0 && !has_k4; c &= c - 1)
        has_k4 = (adj[static_cast<std::size_t>(std::countr_zero(c))] & common) != 0;
    }
    if (has_k4) continue;
    ++rep.k4_free;
    const std::int64_t deletions = e - detail::max_cut_masks(adj).first;
    ++rep.deletion_histogram[deletions];
    if (9 * deletions > static_cast<std::int64_t>(n) * n) ++rep.violations;
    if (deletions > rep.max_min_deletions) {
      rep.max_min_deletions = deletions;
      argmax.clear();
    }
    if (deletions == rep.max_min_deletions) argmax.push_back(code);
  }

  std::map<std::uint64_t, std::int64_t> classes;
  for (std::uint64_t code : argmax) ++classes[canonical_code(detail::decode_pair_code(n, code))];
  for (const auto& [canon, count] : classes) {
    Graph rep_graph = detail::decode_pair_code(n, canon);
    auto parts = complete_multipartite_parts(rep_graph);
    rep.maximizers.push_back({canon, std::move(rep_graph), count, std::move(parts)});
  }
  return rep;
}

}  // namespace k4bip
