#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "k4bip/errors.hpp"
#include "k4bip/graph.hpp"

namespace k4bip {

/// Seeded randomness with a portable draw discipline.
///
/// The engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Distributions are not taken from <random> since their outputs
/// are implementation-defined; instead:
///   below(k)    rejection sampling on the raw 64-bit word: discard words
///               >= 2^64 - (2^64 mod k), return word mod k;
///   unit()      (word >> 11) * 2^-53;
///   chance(p)   unit() < p;
///   shuffle     Fisher-Yates from the back, j = below(i + 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below needs a positive bound");
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed for trial `index` from a base seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum class Family { complete_multipartite, blowup, random_tripartite, random_k4free_process, random_gnp };

struct GeneratorSpec {
  Family family = Family::random_tripartite;
  int n = 0;
  std::vector<int> parts;                 // complete_multipartite
  double p = 0.5;                         // random_tripartite, random_gnp
  std::optional<std::int64_t> max_edges;  // random_k4free_process stopping rule
  std::uint64_t seed = 0;
};

inline Graph empty_graph(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(Edge::normalized(v, (v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::normalized(i, (i + 1) % 5));          // outer cycle
    edges.push_back(Edge::normalized(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    edges.push_back({i, 5 + i});                                // spokes
  }
  return Graph::from_edges(10, edges);
}

/// Edges exactly between distinct parts; parts are consecutive vertex ranges.
inline Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  bool nonzero = false;
  for (int a : parts) {
    if (a < 0) throw InputError("part sizes must be non-negative");
    n += a;
    nonzero = nonzero || a > 0;
  }
  if (!nonzero) throw InputError("complete_multipartite needs at least one nonzero part");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph complete_multipartite(std::initializer_list<int> parts) {
  return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/// Base vertex b becomes the independent set {b*t, ..., b*t + t - 1}.
inline Graph blowup(const Graph& base, int t) {
  if (t < 1) throw InputError("blow-up factor must be at least 1");
  std::vector<Edge> edges;
  base.for_each_edge([&](int a, int b) {
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) edges.push_back(Edge::normalized(a * t + i, b * t + j));
  });
  return Graph::from_edges(base.vertex_count() * t, edges);
}

/// Each vertex joins a uniform part among 3, then each cross pair is kept with probability p.
inline Graph random_tripartite(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw InputError("random_tripartite needs n >= 0 and p in [0,1]");
  Rng rng(seed);
  std::vector<int> part(static_cast<std::size_t>(n));
  for (auto& x : part) x = static_cast<int>(rng.below(3));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)] && rng.chance(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Visits all vertex pairs in a uniformly random order and adds each one that
/// does not close a K4, stopping early once max_edges is reached. A rejected
/// pair can never become admissible later, so one pass yields a maximal
/// K4-free graph when no cap is given.
inline Graph random_k4free_process(int n, std::uint64_t seed, std::optional<std::int64_t> max_edges = std::nullopt) {
  if (n < 0) throw InputError("negative vertex count");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  rng.shuffle(pairs);
  std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<Edge> kept;
  for (const Edge& e : pairs) {
    if (max_edges && static_cast<std::int64_t>(kept.size()) >= *max_edges) break;
    const VertexSet common = adj[static_cast<std::size_t>(e.u)] & adj[static_cast<std::size_t>(e.v)];
    bool closes_k4 = false;
    common.for_each([&](int w) { closes_k4 = closes_k4 || intersects(adj[static_cast<std::size_t>(w)], common); });
    if (closes_k4) continue;
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
    kept.push_back(e);
  }
  return Graph::from_edges(n, kept);
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw InputError("random_gnp needs n >= 0 and p in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Random d-regular graph on even n: a circulant with a random jump set,
/// then a random relabelling.
inline Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw InputError("random_regular needs an even n >= 2");
  if (d < 0 || d >= n) throw InputError("random_regular needs 0 <= d < n");
  Rng rng(seed);
  std::vector<int> jumps;
  for (int j = 1; j < n / 2; ++j) jumps.push_back(j);
  rng.shuffle(jumps);
  jumps.resize(static_cast<std::size_t>(d / 2));
  if (d % 2 == 1) jumps.push_back(n / 2);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int j : jumps)
      edges.push_back(Edge::normalized(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>((v + j) % n)]));
  return Graph::from_edges(n, edges);
}

/// Seeded K4-free instance; only the two K4-free random families are accepted.
inline Graph random_k4free(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::random_tripartite:
      return random_tripartite(spec.n, spec.p, spec.seed);
    case Family::random_k4free_process:
      return random_k4free_process(spec.n, spec.seed, spec.max_edges);
    default:
      throw InputError("random_k4free accepts random_tripartite or random_k4free_process");
  }
}

inline std::optional<Family> parse_family(const std::string& name) {
  if (name == "complete_multipartite") return Family::complete_multipartite;
  if (name == "blowup") return Family::blowup;
  if (name == "random_tripartite") return Family::random_tripartite;
  if (name == "random_k4free_process") return Family::random_k4free_process;
  if (name == "random_gnp") return Family::random_gnp;
  return std::nullopt;
}

}  // namespace k4bip
