#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k4bip/cut_engine.hpp"
#include "k4bip/errors.hpp"
#include "k4bip/generators.hpp"
#include "k4bip/graph.hpp"
#include "k4bip/rational.hpp"

namespace k4bip {

/// Caller-supplied vertex partition with the regularity parameters.
struct Partition {
  std::vector<std::vector<int>> classes;
  Rational epsilon = ratio(1, 10);
  Rational delta = ratio(1, 2);

  int class_count() const { return static_cast<int>(classes.size()); }

  /// Class sizes differ by at most one.
  bool is_equitable() const {
    if (classes.empty()) return true;
    auto [lo, hi] = std::minmax_element(classes.begin(), classes.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return hi->size() - lo->size() <= 1;
  }
};

/// Checks disjointness, coverage and non-empty classes; returns the classes as bitsets.
inline std::vector<VertexSet> validate_partition(const Graph& g, const Partition& p) {
  const int n = g.vertex_count();
  if (p.epsilon <= 0) throw InputError("epsilon must be positive");
  if (p.delta < 0) throw InputError("delta must be non-negative");
  std::vector<VertexSet> sets;
  VertexSet seen(n);
  for (const auto& cls : p.classes) {
    if (cls.empty()) throw InputError("partition classes must be non-empty");
    VertexSet s(n);
    for (int v : cls) {
      if (v < 0 || v >= n) throw InputError("partition vertex " + std::to_string(v) + " out of range");
      if (seen.contains(v)) throw InputError("vertex " + std::to_string(v) + " appears in two classes");
      seen.insert(v);
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  if (seen.size() != n) throw InputError("partition does not cover every vertex");
  return sets;
}

/// e(A,B) / (|A| |B|) for disjoint non-empty a, b.
inline Rational density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw InputError("density needs non-empty sets");
  if (intersects(a, b)) throw InputError("density needs disjoint sets");
  return Rational(BigInt(g.edges_between(a, b)), BigInt(static_cast<std::int64_t>(a.size()) * b.size()));
}

enum class RegularityMode { exact, sampled };
enum class Verdict { regular, irregular, sampled_regular };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::regular: return "regular";
    case Verdict::irregular: return "irregular";
    case Verdict::sampled_regular: return "sampled-regular";
  }
  return "unknown";
}

struct PairClassification {
  int i = 0, j = 0;
  Rational density = 0;
  Verdict verdict = Verdict::regular;
  RegularityMode mode = RegularityMode::exact;
  std::vector<int> witness_x, witness_y;  // only for irregular pairs
  Rational witness_density = 0;

  bool counts_as_regular() const { return verdict != Verdict::irregular; }
};

struct SamplingOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
};

inline constexpr int kExactRegularityCap = 16;

namespace detail {

/// Smallest subset size k with k > eps * total.
inline int qualifying_size(int total, const Rational& eps) {
  Rational bound = eps * total;
  Rational k = floor_of(bound) + 1;
  return k > total ? total + 1 : static_cast<int>(numerator_of(k));
}

inline bool deviates(const Rational& d, const Rational& base, const Rational& eps) { return abs(d - base) >= eps; }

}  // namespace detail

/// Whether every X in A, Y in B with |X| > eps|A| and |Y| > eps|B| has
/// |d(X,Y) - d(A,B)| < eps.
///
/// Exact mode enumerates the subsets X of the smaller side; for a fixed X the
/// extreme densities over |Y| = s are attained by the s members of the other
/// side with the most (fewest) neighbours in X, so scanning those suffices.
/// The smaller side may hold at most kExactRegularityCap vertices.
/// Sampled mode draws random qualifying pairs and can only refute regularity.
inline PairClassification is_epsilon_regular(const Graph& g, const VertexSet& a, const VertexSet& b,
                                             const Rational& eps, RegularityMode mode = RegularityMode::exact,
                                             SamplingOptions sampling = {}) {
  if (eps <= 0) throw InputError("epsilon must be positive");
  PairClassification out;
  out.density = density(g, a, b);
  out.mode = mode;
  const int n = g.vertex_count();

  if (mode == RegularityMode::exact) {
    const bool swap = b.size() < a.size();
    const std::vector<int> enumerated = swap ? b.to_vector() : a.to_vector();
    const std::vector<int> other = swap ? a.to_vector() : b.to_vector();
    const int ne = static_cast<int>(enumerated.size());
    const int no = static_cast<int>(other.size());
    if (ne > kExactRegularityCap)
      throw CapacityError("exact regularity check needs a side of at most " + std::to_string(kExactRegularityCap) +
                          " vertices");
    const int min_e = detail::qualifying_size(ne, eps);
    const int min_o = detail::qualifying_size(no, eps);
    if (min_e > ne || min_o > no) return out;  // no qualifying subsets

    std::vector<int> hits(static_cast<std::size_t>(no));
    std::vector<int> order(static_cast<std::size_t>(no));
    for (std::uint32_t code = 1; code < (std::uint32_t{1} << ne); ++code) {
      const int xs = std::popcount(code);
      if (xs < min_e) continue;
      VertexSet x(n);
      for (int k = 0; k < ne; ++k)
        if ((code >> k) & 1U) x.insert(enumerated[static_cast<std::size_t>(k)]);
      for (int k = 0; k < no; ++k) hits[static_cast<std::size_t>(k)] = intersection_size(g.neighbors(other[static_cast<std::size_t>(k)]), x);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return hits[static_cast<std::size_t>(l)] > hits[static_cast<std::size_t>(r)]; });

      for (int extreme = 0; extreme < 2; ++extreme) {
        std::int64_t acc = 0;
        for (int s = 1; s <= no; ++s) {
          // extreme 0 walks the densest members first, extreme 1 the sparsest
          const int pick = extreme == 0 ? order[static_cast<std::size_t>(s - 1)] : order[static_cast<std::size_t>(no - s)];
          acc += hits[static_cast<std::size_t>(pick)];
          if (s < min_o) continue;
          Rational d(BigInt(acc), BigInt(static_cast<std::int64_t>(xs) * s));
          if (!detail::deviates(d, out.density, eps)) continue;
          std::vector<int> y;
          for (int t = 0; t < s; ++t)
            y.push_back(other[static_cast<std::size_t>(extreme == 0 ? order[static_cast<std::size_t>(t)] : order[static_cast<std::size_t>(no - 1 - t)])]);
          std::sort(y.begin(), y.end());
          out.verdict = Verdict::irregular;
          out.witness_density = d;
          out.witness_x = x.to_vector();
          out.witness_y = std::move(y);
          if (swap) std::swap(out.witness_x, out.witness_y);
          return out;
        }
      }
    }
    return out;
  }

  const std::vector<int> av = a.to_vector();
  const std::vector<int> bv = b.to_vector();
  const int min_a = detail::qualifying_size(static_cast<int>(av.size()), eps);
  const int min_b = detail::qualifying_size(static_cast<int>(bv.size()), eps);
  if (min_a > static_cast<int>(av.size()) || min_b > static_cast<int>(bv.size())) return out;
  out.verdict = Verdict::sampled_regular;
  Rng rng(sampling.seed);
  auto draw = [&](std::vector<int> pool, int min_size) {
    const int size = rng.between(min_size, static_cast<int>(pool.size()));
    for (int k = 0; k < size; ++k) std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(k) + rng.below(pool.size() - static_cast<std::size_t>(k))]);
    pool.resize(static_cast<std::size_t>(size));
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  for (int trial = 0; trial < sampling.samples; ++trial) {
    std::vector<int> xv = draw(av, min_a);
    std::vector<int> yv = draw(bv, min_b);
    Rational d = density(g, VertexSet(n, xv), VertexSet(n, yv));
    if (detail::deviates(d, out.density, eps)) {
      out.verdict = Verdict::irregular;
      out.witness_density = d;
      out.witness_x = std::move(xv);
      out.witness_y = std::move(yv);
      return out;
    }
  }
  return out;
}

struct ReducedGraph {
  Graph graph;
  std::vector<PairClassification> pairs;  // ordered by (i, j)
};

/// Reduced graph on the classes: (i, j) is an edge iff the pair is regular
/// (or sampled-regular) with density >= delta.
inline ReducedGraph classify_pairs(const Graph& g, const Partition& p, RegularityMode mode = RegularityMode::exact,
                                   SamplingOptions sampling = {}) {
  const auto sets = validate_partition(g, p);
  const int k = p.class_count();
  ReducedGraph out;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      SamplingOptions pair_sampling{sampling.samples, derive_seed(sampling.seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(j))};
      PairClassification c = is_epsilon_regular(g, sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)], p.epsilon, mode, pair_sampling);
      c.i = i;
      c.j = j;
      if (c.counts_as_regular() && c.density >= p.delta) edges.push_back({i, j});
      out.pairs.push_back(std::move(c));
    }
  out.graph = Graph::from_edges(k, edges);
  return out;
}

inline Graph reduced_graph(const Graph& g, const Partition& p, RegularityMode mode = RegularityMode::exact,
                           SamplingOptions sampling = {}) {
  return classify_pairs(g, p, mode, sampling).graph;
}

struct HFreeResult {
  DeletionCertificate certificate;
  ReducedGraph reduced;
  DeletionCertificate reduced_certificate;
  std::int64_t intra_class = 0;
  std::int64_t irregular_pairs = 0;
  std::int64_t sparse_pairs = 0;
  std::int64_t lifted = 0;
  std::int64_t irregular_pair_count = 0;
  bool equitable = false;
  bool regular_partition = false;  // |V_i| <= eps n and at most eps k^2 irregular pairs
  Rational accounting_bound = 0;   // (k^2/9) ceil(n/k)^2 + eps n^2 + delta n^2
  bool within_accounting_bound = false;
};

/// Bipartizes g through its reduced graph: deletes intra-class edges, edges of
/// irregular pairs, edges of pairs sparser than delta, and the lift of the
/// reduced graph's certificate. The reduced graph must be K4-free.
inline HFreeResult hfree_bipartize(const Graph& g, const Partition& p, RegularityMode mode = RegularityMode::exact,
                                   SamplingOptions sampling = {}) {
  const auto sets = validate_partition(g, p);
  HFreeResult out;
  out.reduced = classify_pairs(g, p, mode, sampling);
  if (auto k4 = find_k4(out.reduced.graph))
    throw K4Error(*k4);  // the pipeline assumes a K4-free reduced graph

  BipartizeResult inner = bipartize(out.reduced.graph);
  out.reduced_certificate = inner.certificate;
  const auto& class_side = inner.best.side;

  const int n = g.vertex_count();
  const int k = p.class_count();
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) sets[static_cast<std::size_t>(i)].for_each([&](int v) { class_of[static_cast<std::size_t>(v)] = i; });
  std::vector<const PairClassification*> pair_at(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), nullptr);
  for (const auto& c : out.reduced.pairs) {
    pair_at[static_cast<std::size_t>(c.i) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c.j)] = &c;
    if (!c.counts_as_regular()) ++out.irregular_pair_count;
  }

  g.for_each_edge([&](int u, int v) {
    int cu = class_of[static_cast<std::size_t>(u)];
    int cv = class_of[static_cast<std::size_t>(v)];
    if (cu == cv) {
      ++out.intra_class;
      out.certificate.edges.push_back({u, v});
      return;
    }
    const PairClassification& c = *pair_at[static_cast<std::size_t>(std::min(cu, cv)) * static_cast<std::size_t>(k) + static_cast<std::size_t>(std::max(cu, cv))];
    if (!c.counts_as_regular()) {
      ++out.irregular_pairs;
    } else if (c.density < p.delta) {
      ++out.sparse_pairs;
    } else if (class_side[static_cast<std::size_t>(cu)] == class_side[static_cast<std::size_t>(cv)]) {
      ++out.lifted;
    } else {
      return;
    }
    out.certificate.edges.push_back({u, v});
  });
  out.certificate.method = Method::regularity_lift;

  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  const std::int64_t block = k == 0 ? 0 : (n + k - 1) / k;
  out.accounting_bound = Rational(BigInt(static_cast<std::int64_t>(k) * k * block * block), BigInt(9)) + p.epsilon * nn + p.delta * nn;
  out.certificate.claimed_bound = out.accounting_bound;
  out.within_accounting_bound = Rational(static_cast<std::int64_t>(out.certificate.edges.size())) <= out.accounting_bound;
  out.equitable = p.is_equitable();
  bool small_classes = true;
  for (const auto& s : sets) small_classes = small_classes && Rational(s.size()) <= p.epsilon * n;
  out.regular_partition = small_classes && Rational(out.irregular_pair_count) <= p.epsilon * k * k;

  if (!verify_certificate(g, out.certificate)) throw TheoremViolation("lifted certificate leaves an odd cycle");
  return out;
}

}  // namespace k4bip
