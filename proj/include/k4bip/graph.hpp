#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k4bip/errors.hpp"
#include "k4bip/vertex_set.hpp"

namespace k4bip {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Pairwise-adjacent triple with u < v < w.
struct Triangle {
  int u = 0;
  int v = 0;
  int w = 0;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct VertexLocalStats {
  int vertex = 0;
  int degree = 0;
  std::int64_t ev = 0;  // edges spanned by N(v)
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph from an edge list; duplicates collapse, self-loops and
  /// out-of-range endpoints are rejected.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const Edge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range for n=" + std::to_string(n));
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      g.rows_[static_cast<std::size_t>(e.u)].insert(e.v);
      g.rows_[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    g.finish();
    return g;
  }

  Graph(const Graph& o)
      : n_(o.n_), e_(o.e_), rows_(o.rows_), degrees_(o.degrees_), triangles_(o.triangles_.load()) {}
  Graph(Graph&& o) noexcept
      : n_(o.n_),
        e_(o.e_),
        rows_(std::move(o.rows_)),
        degrees_(std::move(o.degrees_)),
        triangles_(o.triangles_.load()) {}
  Graph& operator=(Graph o) noexcept {
    n_ = o.n_;
    e_ = o.e_;
    rows_ = std::move(o.rows_);
    degrees_ = std::move(o.degrees_);
    triangles_.store(o.triangles_.load());
    return *this;
  }

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept { return e_; }

  int degree(int v) const { return degrees_[checked(v)]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const VertexSet& neighbors(int v) const { return rows_[checked(v)]; }
  bool adjacent(int u, int v) const { return rows_[checked(u)].contains(v); }

  VertexSet common_neighbors(int u, int v) const { return neighbors(u) & neighbors(v); }
  int codegree(int u, int v) const { return intersection_size(neighbors(u), neighbors(v)); }

  VertexSet all_vertices() const { return VertexSet::full(n_); }

  template <class F>
  void for_each_edge(F&& f) const {
    for (int u = 0; u < n_; ++u)
      rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
        if (u < v) f(u, v);
      });
  }

  /// Edges sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(e_));
    for_each_edge([&](int u, int v) { out.push_back({u, v}); });
    return out;
  }

  /// e(S): edges with both endpoints in s.
  std::int64_t edges_inside(const VertexSet& s) const {
    std::int64_t twice = 0;
    s.for_each([&](int v) { twice += intersection_size(rows_[static_cast<std::size_t>(v)], s); });
    return twice / 2;
  }

  /// e(A,B) for disjoint a, b.
  std::int64_t edges_between(const VertexSet& a, const VertexSet& b) const {
    std::int64_t c = 0;
    a.for_each([&](int v) { c += intersection_size(rows_[static_cast<std::size_t>(v)], b); });
    return c;
  }

  /// Triangle count m, computed on first use.
  std::int64_t triangle_count() const {
    std::int64_t m = triangles_.load(std::memory_order_relaxed);
    if (m >= 0) return m;
    std::int64_t codegree_sum = 0;
    for_each_edge([&](int u, int v) { codegree_sum += codegree(u, v); });
    // each triangle is seen once from each of its three edges
    if (codegree_sum % 3 != 0) throw TheoremViolation("edge codegree sum is not divisible by 3");
    m = codegree_sum / 3;
    triangles_.store(m, std::memory_order_relaxed);
    return m;
  }

  VertexLocalStats local_stats(int v) const {
    const VertexSet& nv = neighbors(v);
    std::int64_t twice = 0;
    nv.for_each([&](int u) { twice += intersection_size(rows_[static_cast<std::size_t>(u)], nv); });
    return {v, degrees_[static_cast<std::size_t>(v)], twice / 2};
  }

  /// G[vertices], relabelled so that vertices[i] becomes i.
  Graph induced_subgraph(std::span<const int> vertices) const {
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j])) sub.push_back({static_cast<int>(i), static_cast<int>(j)});
    return from_edges(static_cast<int>(vertices.size()), sub);
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw InputError("permutation size mismatch");
    std::vector<Edge> out;
    for_each_edge([&](int u, int v) { out.push_back(Edge::normalized(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])); });
    return from_edges(n_, out);
  }

  Graph without_edges(std::span<const Edge> removed) const {
    Graph g(*this);
    for (const Edge& e : removed) {
      if (!adjacent(e.u, e.v))
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
      g.rows_[static_cast<std::size_t>(e.u)].erase(e.v);
      g.rows_[static_cast<std::size_t>(e.v)].erase(e.u);
    }
    g.finish();
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t checked(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
  }

  void finish() {
    degrees_.resize(static_cast<std::size_t>(n_));
    std::int64_t sum = 0;
    for (int v = 0; v < n_; ++v) {
      degrees_[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].size();
      sum += degrees_[static_cast<std::size_t>(v)];
    }
    e_ = sum / 2;
    triangles_.store(-1);
  }

  int n_ = 0;
  std::int64_t e_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
  mutable std::atomic<std::int64_t> triangles_{-1};
};

inline Graph from_edge_list(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw InputError("common_neighbors needs two distinct vertices");
  return g.common_neighbors(u, v);
}

/// Every triangle exactly once, in lexicographic order.
inline std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  g.for_each_edge([&](int u, int v) {
    g.common_neighbors(u, v).for_each([&](int w) {
      if (w > v) out.push_back({u, v, w});
    });
  });
  if (static_cast<std::int64_t>(out.size()) != g.triangle_count())
    throw TheoremViolation("triangle listing disagrees with the codegree identity");
  return out;
}

/// Some 4 pairwise-adjacent vertices (sorted), if any exist.
inline std::optional<std::array<int, 4>> find_k4(const Graph& g) {
  std::optional<std::array<int, 4>> found;
  for (int u = 0; u < g.vertex_count() && !found; ++u) {
    g.neighbors(u).for_each([&](int v) {
      if (found || v < u) return;
      VertexSet common = g.common_neighbors(u, v);
      common.for_each([&](int w) {
        if (found) return;
        int x = intersection_size(g.neighbors(w), common) > 0 ? (g.neighbors(w) & common).first() : -1;
        if (x >= 0) {
          std::array<int, 4> k{u, v, w, x};
          std::sort(k.begin(), k.end());
          found = k;
        }
      });
    });
  }
  return found;
}

inline bool is_k4_free(const Graph& g) { return !find_k4(g).has_value(); }

inline void require_k4_free(const Graph& g) {
  if (auto k = find_k4(g)) throw K4Error(*k);
}

/// Whether 3e <= n^2; for K4-free graphs this must hold.
inline bool turan_check(const Graph& g) {
  require_k4_free(g);
  const std::int64_t n = g.vertex_count();
  return 3 * g.edge_count() <= n * n;
}

/// Proper 2-colouring (colour 0 for the smallest vertex of each component), or nullopt.
inline std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      bool clash = false;
      g.neighbors(x).for_each([&](int y) {
        auto& cy = colour[static_cast<std::size_t>(y)];
        if (cy < 0) {
          cy = 1 - colour[static_cast<std::size_t>(x)];
          stack.push_back(y);
        } else if (cy == colour[static_cast<std::size_t>(x)]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  std::vector<std::uint8_t> out(colour.begin(), colour.end());
  return out;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

}  // namespace k4bip
