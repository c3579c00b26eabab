#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k4bip/errors.hpp"
#include "k4bip/graph.hpp"
#include "k4bip/rational.hpp"

namespace k4bip {

/// Two-sided vertex assignment. side[v] is 0 or 1.
struct Bipartition {
  std::vector<std::uint8_t> side;
  std::int64_t cut_value = 0;
  std::vector<Edge> deletion_set;  // same-side edges, sorted
};

inline std::int64_t cut_value(const Graph& g, std::span<const std::uint8_t> side) {
  if (side.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError("assignment does not cover every vertex");
  std::int64_t cut = 0;
  g.for_each_edge([&](int u, int v) { cut += side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]; });
  return cut;
}

inline Bipartition make_bipartition(const Graph& g, std::vector<std::uint8_t> side) {
  if (side.size() != static_cast<std::size_t>(g.vertex_count()))
    throw InputError("assignment does not cover every vertex");
  Bipartition b;
  g.for_each_edge([&](int u, int v) {
    if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)])
      ++b.cut_value;
    else
      b.deletion_set.push_back({u, v});
  });
  b.side = std::move(side);
  return b;
}

/// Side 1 is exactly the members of s.
inline Bipartition make_bipartition(const Graph& g, const VertexSet& s) {
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.vertex_count()), 0);
  s.for_each([&](int v) { side[static_cast<std::size_t>(v)] = 1; });
  return make_bipartition(g, std::move(side));
}

// ---------------------------------------------------------------------------
// Four-class pairing cut

struct FourPartition {
  VertexSet v1, v2, v3, x;
  Triangle source_triangle;
};

/// Best of the three ways to pair four classes into two sides. Classes 0..2
/// must be independent; edges inside class 3 are never cut. The best pairing
/// is at least the mean, so 3 * cut >= 2 * (e - e(class 3)).
inline Bipartition four_partite_cut(const Graph& g, const std::array<VertexSet, 4>& classes) {
  const int n = g.vertex_count();
  VertexSet seen(n);
  for (const auto& c : classes) {
    if (c.universe() != n) throw InputError("class universe does not match the graph");
    if (intersects(seen, c)) throw InputError("four_partite_cut classes overlap");
    seen |= c;
  }
  if (seen.size() != n) throw InputError("four_partite_cut classes do not cover every vertex");
  for (int i = 0; i < 3; ++i)
    if (g.edges_inside(classes[static_cast<std::size_t>(i)]) != 0)
      throw InputError("class " + std::to_string(i + 1) + " of the four-partition is not independent");

  // pairing p puts class 0 with class p+1 on side 0
  std::optional<Bipartition> best;
  for (int partner = 1; partner <= 3; ++partner) {
    VertexSet side1(n);
    for (int c = 1; c <= 3; ++c)
      if (c != partner) side1 |= classes[static_cast<std::size_t>(c)];
    Bipartition b = make_bipartition(g, side1);
    if (!best || b.cut_value > best->cut_value) best = std::move(b);
  }
  const std::int64_t inside_x = g.edges_inside(classes[3]);
  if (3 * best->cut_value < 2 * (g.edge_count() - inside_x))
    throw TheoremViolation("four-class pairing cut below 2(e - e(X))/3");
  return *best;
}

inline Bipartition four_partite_cut(const Graph& g, const FourPartition& p) {
  return four_partite_cut(g, std::array<VertexSet, 4>{p.v1, p.v2, p.v3, p.x});
}

// ---------------------------------------------------------------------------
// Codegree triangle

struct CodegreeTriangle {
  Triangle triangle;
  std::int64_t codegree_sum = 0;
};

/// Triangle maximizing d(u,v) + d(u,w) + d(v,w), lexicographically smallest
/// among maximizers; nullopt when the graph is triangle-free.
inline std::optional<CodegreeTriangle> best_codegree_triangle(const Graph& g) {
  std::optional<CodegreeTriangle> best;
  for (const Triangle& t : triangles(g)) {
    std::int64_t s = g.codegree(t.u, t.v) + g.codegree(t.u, t.w) + g.codegree(t.v, t.w);
    if (!best || s > best->codegree_sum) best = CodegreeTriangle{t, s};
  }
  if (best && g.edge_count() * best->codegree_sum < 9 * g.triangle_count())
    throw TheoremViolation("best codegree sum below 9m/e");
  return best;
}

// ---------------------------------------------------------------------------
// Neighbourhood cuts and the two averaged inequalities

inline std::vector<VertexLocalStats> all_local_stats(const Graph& g) {
  std::vector<VertexLocalStats> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.local_stats(v));
  return out;
}

/// Value of the cut (N(v), V \ N(v)) for every v: sum of d(u) over N(v), minus 2 e_v.
inline std::vector<std::int64_t> neighborhood_candidates(const Graph& g) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::int64_t degree_sum = 0;
    g.neighbors(v).for_each([&](int u) { degree_sum += g.degree(u); });
    out.push_back(degree_sum - 2 * g.local_stats(v).ev);
  }
  return out;
}

struct PivotCut {
  Bipartition partition;
  int pivot = -1;  // vertex whose neighbourhood seeded the winning cut
};

namespace detail {

inline PivotCut best_neighborhood_cut(const Graph& g) {
  const auto values = neighborhood_candidates(g);
  int best = 0;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (values[static_cast<std::size_t>(v)] > values[static_cast<std::size_t>(best)]) best = v;
  PivotCut out{make_bipartition(g, g.neighbors(best)), best};
  if (out.partition.cut_value != values[static_cast<std::size_t>(best)])
    throw TheoremViolation("neighbourhood cut disagrees with its closed form");
  return out;
}

}  // namespace detail

/// Best cut of the form (N(v), V \ N(v)). Guarantees n^2 cut >= 4e^2 - 6mn.
inline Bipartition neighborhood_cut(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n < 1) throw InputError("neighborhood_cut needs at least one vertex");
  PivotCut best = detail::best_neighborhood_cut(g);
  const std::int64_t e = g.edge_count();
  if (n * n * best.partition.cut_value < 4 * e * e - 6 * g.triangle_count() * n)
    throw TheoremViolation("neighbourhood cut below 4e^2/n^2 - 6m/n");
  return std::move(best.partition);
}

/// Right-hand side of (1/n) sum d(v)^2 - (2/n) sum e_v.
inline Rational neighborhood_average_bound(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n == 0) return Rational(0);
  std::int64_t squares = 0;
  std::int64_t ev_sum = 0;
  for (const auto& s : all_local_stats(g)) {
    squares += static_cast<std::int64_t>(s.degree) * s.degree;
    ev_sum += s.ev;
  }
  return Rational(BigInt(squares - 2 * ev_sum), BigInt(n));
}

/// Right-hand side of e/2 + (1/n) sum (4 e_v^2 / d(v)^2 - e_v / 2); isolated vertices contribute 0.
inline Rational refinement_average_bound(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n == 0) return Rational(0);
  Rational sum = 0;
  for (const auto& s : all_local_stats(g)) {
    if (s.degree == 0) continue;
    sum += Rational(BigInt(4 * s.ev * s.ev), BigInt(static_cast<std::int64_t>(s.degree) * s.degree)) -
           Rational(BigInt(s.ev), BigInt(2));
  }
  return Rational(BigInt(g.edge_count()), BigInt(2)) + sum / n;
}

/// Refined cut seeded at v: the best neighbourhood cut of the triangle-free
/// G[N(v)], extended greedily over V \ N(v) in descending-degree order (ties
/// by id), each vertex joining the side holding fewer of its already placed
/// neighbours (ties to side 0). Each edge leaving N(v) is counted when its
/// later endpoint is placed, so the result is at least inner + (e - e_v)/2.
struct RefinementCandidate {
  Bipartition partition;
  std::int64_t inner_cut = 0;  // cut edges inside N(v)
};

inline RefinementCandidate refinement_candidate(const Graph& g, int v) {
  const int n = g.vertex_count();
  const std::vector<int> inside = g.neighbors(v).to_vector();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::int64_t inner_cut = 0;
  if (!inside.empty()) {
    const Graph local = g.induced_subgraph(inside);
    if (local.triangle_count() != 0) throw K4Error(*find_k4(g));
    const std::int64_t d = local.vertex_count();
    const std::int64_t ev = local.edge_count();
    if (ev > 0) {
      Bipartition inner = neighborhood_cut(local);
      if (d * d * inner.cut_value < 4 * ev * ev)
        throw TheoremViolation("inner neighbourhood cut below 4e_v^2/d(v)^2");
      inner_cut = inner.cut_value;
      for (std::size_t i = 0; i < inside.size(); ++i) side[static_cast<std::size_t>(inside[i])] = inner.side[i];
    } else {
      for (int u : inside) side[static_cast<std::size_t>(u)] = 0;
    }
  }

  std::vector<int> rest = (g.all_vertices() - g.neighbors(v)).to_vector();
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int x : rest) {
    int count[2] = {0, 0};
    g.neighbors(x).for_each([&](int y) {
      int s = side[static_cast<std::size_t>(y)];
      if (s >= 0) ++count[s];
    });
    side[static_cast<std::size_t>(x)] = count[1] < count[0] ? 1 : 0;
  }

  RefinementCandidate out{make_bipartition(g, std::vector<std::uint8_t>(side.begin(), side.end())), inner_cut};
  const std::int64_t ev = g.local_stats(v).ev;
  if (2 * out.partition.cut_value < 2 * inner_cut + (g.edge_count() - ev))
    throw TheoremViolation("greedy extension below inner + (e - e_v)/2");
  return out;
}

/// Cut for K4-free graphs with 7n^2 cut >= 2en^2 + 8e^2.
///
/// The guarantee is a 3/7 : 4/7 mixture of the neighbourhood average and the
/// refinement average, so the maximum is taken over both candidate families
/// (refinements first, then plain neighbourhood cuts; lowest vertex wins ties).
inline Bipartition k4free_cut(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n < 1) throw InputError("k4free_cut needs at least one vertex");
  require_k4_free(g);
  std::optional<Bipartition> best;
  for (int v = 0; v < g.vertex_count(); ++v) {
    RefinementCandidate c = refinement_candidate(g, v);
    if (!best || c.partition.cut_value > best->cut_value) best = std::move(c.partition);
  }
  PivotCut plain = detail::best_neighborhood_cut(g);
  if (plain.partition.cut_value > best->cut_value) best = std::move(plain.partition);
  const std::int64_t e = g.edge_count();
  if (7 * n * n * best->cut_value < 2 * e * n * n + 8 * e * e)
    throw TheoremViolation("K4-free cut below 2e/7 + 8e^2/(7n^2)");
  return *best;
}

/// (1/(1+a)) A + (a/(1+a)) B for the two averaged right-hand sides; a lower bound on b(G).
inline Rational combined_lower_bound(const Graph& g, const Rational& a) {
  if (a <= 0) throw InputError("mixing weight a must be positive");
  require_k4_free(g);
  return (neighborhood_average_bound(g) + a * refinement_average_bound(g)) / (1 + a);
}

// ---------------------------------------------------------------------------
// Triangle-seeded four-partition

struct TriangleCut {
  FourPartition parts;
  Bipartition partition;
  std::int64_t codegree_sum = 0;
  std::int64_t x_edges = 0;  // e(X)
};

/// Four-partition V1 = N(u,v), V2 = N(u,w), V3 = N(v,w), X = rest around the
/// best codegree triangle. Any overlap or any edge inside V1..V3 exhibits a
/// K4 and raises K4Error. nullopt when the graph is triangle-free.
inline std::optional<TriangleCut> triangle_4partite_cut(const Graph& g) {
  auto best = best_codegree_triangle(g);
  if (!best) return std::nullopt;
  const auto [u, v, w] = best->triangle;
  const int n = g.vertex_count();
  FourPartition p{g.common_neighbors(u, v), g.common_neighbors(u, w), g.common_neighbors(v, w), VertexSet(n), best->triangle};

  const std::array<std::pair<const VertexSet*, std::array<int, 2>>, 3> named{
      {{&p.v1, {u, v}}, {&p.v2, {u, w}}, {&p.v3, {v, w}}}};
  for (std::size_t i = 0; i < 3; ++i) {
    const VertexSet& cls = *named[i].first;
    for (std::size_t j = i + 1; j < 3; ++j) {
      VertexSet both = cls & *named[j].first;
      if (!both.empty()) {
        // a vertex adjacent to all of u, v, w
        std::array<int, 4> k{u, v, w, both.first()};
        std::sort(k.begin(), k.end());
        throw K4Error(k);
      }
    }
    // an edge inside N(a,b) forms a K4 with a, b
    for (int y : cls.to_vector()) {
      VertexSet inner = g.neighbors(y) & cls;
      if (!inner.empty()) {
        std::array<int, 4> k{named[i].second[0], named[i].second[1], y, inner.first()};
        std::sort(k.begin(), k.end());
        throw K4Error(k);
      }
    }
  }
  p.x = g.all_vertices() - (p.v1 | p.v2 | p.v3);

  TriangleCut out{p, four_partite_cut(g, p), best->codegree_sum, g.edges_inside(p.x)};
  return out;
}

// ---------------------------------------------------------------------------
// Exact scalar functions

/// t/18 + (2/9)(5/2 - t - 1/t)^2.
inline Rational technical_f(const Rational& t) {
  if (t == 0) throw InputError("technical_f is undefined at t = 0");
  const Rational inner = ratio(5, 2) - t - 1 / t;
  return t / 18 + ratio(2, 9) * inner * inner;
}

/// 4t^3 - 11t^2 + 9t - 2.
inline Rational technical_g(const Rational& t) {
  if (t == 0) throw InputError("technical_g is undefined at t = 0");
  return ((4 * t - 11) * t + 9) * t - 2;
}

/// 5s/7 - 8s^2/7: deletion ratio permitted by the K4-free cut at edge density s = e/n^2.
inline Rational sparse_deletion_ratio(const Rational& s) { return ratio(5, 7) * s - ratio(8, 7) * s * s; }

/// Conjectured deletion constant for K_r-free graphs.
inline Rational kr_conjectured_constant(int r) {
  if (r < 4) throw InputError("kr_conjectured_constant needs r >= 4");
  if (r % 2 == 0) return Rational(BigInt((r - 2) * (r - 2)), BigInt(4 * (r - 1) * (r - 1)));
  return Rational(BigInt(r - 3), BigInt(4 * (r - 1)));
}

// ---------------------------------------------------------------------------
// Bipartization

enum class Method { none, neighborhood, k4free_refine, triangle_4partite, oracle, regularity_lift };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::none: return "none";
    case Method::neighborhood: return "neighborhood";
    case Method::k4free_refine: return "k4free_refine";
    case Method::triangle_4partite: return "triangle_4partite";
    case Method::oracle: return "oracle";
    case Method::regularity_lift: return "regularity_lift";
  }
  return "unknown";
}

struct DeletionCertificate {
  std::vector<Edge> edges;
  Method method = Method::none;
  Rational claimed_bound = 0;  // upper bound on |edges| that the method proves
};

/// Removing the certificate's edges leaves a bipartite graph.
inline bool verify_certificate(const Graph& g, const DeletionCertificate& c) {
  return is_bipartite(g.without_edges(c.edges));
}

struct BoundReport {
  std::int64_t n = 0, e = 0, m = 0;
  Rational t = 0;  // 6e/n^2
  Rational density = 0;  // e/n^2

  // lower bounds on b(G)
  std::optional<Rational> bound_4partite;   // 2(e - e(X))/3
  std::optional<Rational> bound_codegree;   // 9m/e, compared with codegree_sum
  Rational bound_neighborhood = 0;          // 4e^2/n^2 - 6m/n
  Rational average_neighborhood = 0;        // (1/n) sum d^2 - (2/n) sum e_v
  Rational average_refinement = 0;          // e/2 + (1/n) sum (4e_v^2/d^2 - e_v/2)
  Rational bound_k4free = 0;                // 2e/7 + 8e^2/(7n^2)
  Rational bound_combined = 0;              // mixture at a = combined_weight
  Rational combined_weight = ratio(69, 50);

  std::optional<std::int64_t> codegree_sum;
  std::optional<Triangle> source_triangle;
  std::optional<std::int64_t> x_size, x_edges;

  // achieved cuts
  std::int64_t cut_neighborhood = 0;
  std::int64_t cut_k4free = 0;
  std::optional<std::int64_t> cut_triangle_4partite;
  std::int64_t cut_best = 0;

  std::optional<Rational> f_of_t, g_of_t;
  Rational h_of_density = 0;  // 5s/7 - 8s^2/7 with s = e/n^2
  std::string proof_branch;   // "sparse" when 4e <= n^2, else "dense"
  std::int64_t deletions = 0;
  Rational deletion_limit = 0;      // n^2/9
  bool at_floor_limit = false;      // deletions == floor(n^2/9)
};

struct BipartizeResult {
  DeletionCertificate certificate;
  BoundReport report;
  Bipartition best;
};

/// Runs every construction, keeps the largest cut, and certifies 9|D| <= n^2.
inline BipartizeResult bipartize(const Graph& g) {
  require_k4_free(g);
  const std::int64_t n = g.vertex_count();
  const std::int64_t e = g.edge_count();
  BipartizeResult r;
  BoundReport& rep = r.report;
  rep.n = n;
  rep.e = e;
  rep.m = g.triangle_count();
  rep.deletion_limit = Rational(BigInt(n * n), BigInt(9));
  rep.proof_branch = 4 * e <= n * n ? "sparse" : "dense";

  if (n <= 1 || e == 0) {
    r.best = make_bipartition(g, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    r.certificate.method = Method::none;
    r.certificate.claimed_bound = 0;
    rep.at_floor_limit = (n * n) / 9 == 0;
    return r;
  }

  rep.t = Rational(BigInt(6 * e), BigInt(n * n));
  rep.density = Rational(BigInt(e), BigInt(n * n));
  rep.f_of_t = technical_f(rep.t);
  rep.g_of_t = technical_g(rep.t);
  rep.h_of_density = sparse_deletion_ratio(rep.density);
  rep.bound_codegree = Rational(BigInt(9 * rep.m), BigInt(e));
  rep.bound_neighborhood = Rational(BigInt(4 * e * e), BigInt(n * n)) - Rational(BigInt(6 * rep.m), BigInt(n));
  rep.average_neighborhood = neighborhood_average_bound(g);
  rep.average_refinement = refinement_average_bound(g);
  rep.bound_k4free = Rational(BigInt(2 * e), BigInt(7)) + Rational(BigInt(8 * e * e), BigInt(7 * n * n));
  rep.bound_combined = (rep.average_neighborhood + rep.combined_weight * rep.average_refinement) / (1 + rep.combined_weight);

  Bipartition nb = neighborhood_cut(g);
  Bipartition kf = k4free_cut(g);
  rep.cut_neighborhood = nb.cut_value;
  rep.cut_k4free = kf.cut_value;

  r.best = std::move(nb);
  r.certificate.method = Method::neighborhood;
  if (kf.cut_value > r.best.cut_value) {
    r.best = std::move(kf);
    r.certificate.method = Method::k4free_refine;
  }

  if (auto tc = triangle_4partite_cut(g)) {
    rep.codegree_sum = tc->codegree_sum;
    rep.source_triangle = tc->parts.source_triangle;
    rep.x_size = tc->parts.x.size();
    rep.x_edges = tc->x_edges;
    rep.bound_4partite = Rational(BigInt(2 * (e - tc->x_edges)), BigInt(3));
    rep.cut_triangle_4partite = tc->partition.cut_value;
    if (tc->partition.cut_value > r.best.cut_value) {
      r.best = std::move(tc->partition);
      r.certificate.method = Method::triangle_4partite;
    }
  }

  rep.cut_best = r.best.cut_value;
  rep.deletions = static_cast<std::int64_t>(r.best.deletion_set.size());
  rep.at_floor_limit = rep.deletions == (n * n) / 9;
  r.certificate.edges = r.best.deletion_set;
  r.certificate.claimed_bound = rep.deletion_limit;

  if (9 * rep.deletions > n * n) throw TheoremViolation("bipartization deleted more than n^2/9 edges");
  if (!verify_certificate(g, r.certificate)) throw TheoremViolation("deletion certificate leaves an odd cycle");
  return r;
}

}  // namespace k4bip
