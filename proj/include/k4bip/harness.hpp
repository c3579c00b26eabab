#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "k4bip/cut_engine.hpp"
#include "k4bip/edge_list_io.hpp"
#include "k4bip/errors.hpp"
#include "k4bip/generators.hpp"
#include "k4bip/graph.hpp"
#include "k4bip/oracle.hpp"
#include "k4bip/regularity.hpp"
#include "k4bip/serialize.hpp"

namespace k4bip {

/// For a d-regular graph with n even and |S| = n/2: e(S) = e(complement of S),
/// and dropping the edges inside S and its complement leaves a bipartite graph.
inline bool regular_split_check(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw InputError("regular_split_check needs an even number of vertices");
  if (s.universe() != n || s.size() != n / 2) throw InputError("regular_split_check needs |S| = n/2");
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != g.degree(0)) throw InputError("regular_split_check needs a regular graph");
  const VertexSet rest = s.complement();
  const std::int64_t inside_s = g.edges_inside(s);
  const std::int64_t inside_rest = g.edges_inside(rest);
  std::vector<Edge> internal;
  g.for_each_edge([&](int u, int v) {
    if (s.contains(u) == s.contains(v)) internal.push_back({u, v});
  });
  return inside_s == inside_rest && is_bipartite(g.without_edges(internal));
}

enum class Suite { lemmas, theorem, oracle_equivalence, exhaustive, technical, regularity, regular_split };

inline std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "lemmas") return Suite::lemmas;
  if (name == "theorem") return Suite::theorem;
  if (name == "oracle_equivalence") return Suite::oracle_equivalence;
  if (name == "exhaustive") return Suite::exhaustive;
  if (name == "technical") return Suite::technical;
  if (name == "regularity") return Suite::regularity;
  if (name == "regular_split") return Suite::regular_split;
  return std::nullopt;
}

inline std::string suite_name(Suite s) {
  switch (s) {
    case Suite::lemmas: return "lemmas";
    case Suite::theorem: return "theorem";
    case Suite::oracle_equivalence: return "oracle_equivalence";
    case Suite::exhaustive: return "exhaustive";
    case Suite::technical: return "technical";
    case Suite::regularity: return "regularity";
    case Suite::regular_split: return "regular_split";
  }
  return "unknown";
}

struct SuiteConfig {
  Suite suite = Suite::lemmas;
  int trials = 200;
  std::uint64_t seed = 42;
  int min_n = 5;
  int max_n = 40;
  int oracle_max_n = 20;  // oracle_equivalence skips larger instances
  int sweep_n = 6;        // exhaustive
};

struct Instance {
  std::string label;
  Graph graph;
  int trial = -1;  // -1 for fixtures
  std::uint64_t seed = 0;
};

/// Named K4-free fixture graphs.
inline std::vector<Instance> fixture_instances() {
  std::vector<Instance> out;
  auto add = [&](std::string label, Graph g) { out.push_back({std::move(label), std::move(g)}); };
  add("empty_4", empty_graph(4));
  add("single_edge", complete_graph(2));
  add("K3", complete_graph(3));
  add("C5", cycle_graph(5));
  add("C7", cycle_graph(7));
  add("petersen", petersen_graph());
  add("K_1_2_3", complete_multipartite({1, 2, 3}));
  add("K_2_2_2", complete_multipartite({2, 2, 2}));
  add("K_3_3", complete_multipartite({3, 3}));
  add("K_3_3_3", complete_multipartite({3, 3, 3}));
  add("K_4_4_4", complete_multipartite({4, 4, 4}));
  add("K_3_4_5", complete_multipartite({3, 4, 5}));
  add("K_5_5_5", complete_multipartite({5, 5, 5}));
  add("K_6_6_6", complete_multipartite({6, 6, 6}));
  add("K_13_13_14", complete_multipartite({13, 13, 14}));
  add("blowup_C5_2", blowup(cycle_graph(5), 2));
  add("blowup_C5_3", blowup(cycle_graph(5), 3));
  add("blowup_K3_4", blowup(complete_graph(3), 4));
  add("blowup_petersen_2", blowup(petersen_graph(), 2));
  return out;
}

/// Seeded random K4-free instance for one trial.
inline Instance random_instance(std::uint64_t base_seed, int trial, int min_n, int max_n) {
  const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(trial));
  Rng rng(seed);
  const int n = rng.between(min_n, max_n);
  const std::uint64_t graph_seed = rng.next();
  Instance inst;
  inst.trial = trial;
  inst.seed = seed;
  switch (rng.below(3)) {
    case 0:
      inst.label = "random_tripartite";
      inst.graph = random_tripartite(n, rng.unit(), graph_seed);
      break;
    case 1: {
      inst.label = "random_k4free_process";
      std::optional<std::int64_t> cap;
      if (rng.chance(0.5)) cap = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n) * n / 3 + 1));
      inst.graph = random_k4free_process(n, graph_seed, cap);
      break;
    }
    default:
      inst.label = "dense_tripartite";
      inst.graph = random_tripartite(n, 0.7 + 0.3 * rng.unit(), graph_seed);
      break;
  }
  return inst;
}

inline std::vector<Instance> suite_instances(const SuiteConfig& c) {
  std::vector<Instance> out = fixture_instances();
  for (int i = 0; i < c.trials; ++i) out.push_back(random_instance(c.seed, i, c.min_n, c.max_n));
  return out;
}

/// Pass/fail tally for one named property.
class PropertyTally {
 public:
  explicit PropertyTally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<Json()>& counterexample) {
    ++checked_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < kMaxExamples) examples_.push_back(counterexample());
  }

  std::int64_t failures() const { return failures_; }

  Json to_json() const {
    return Json{{"name", name_}, {"checked", checked_}, {"failures", failures_}, {"counterexamples", examples_}};
  }

 private:
  static constexpr std::size_t kMaxExamples = 5;
  std::string name_;
  std::int64_t checked_ = 0;
  std::int64_t failures_ = 0;
  std::vector<Json> examples_;
};

class SuiteReport {
 public:
  PropertyTally& property(const std::string& name) {
    for (auto& [n, t] : tallies_)
      if (n == name) return t;
    tallies_.emplace_back(name, PropertyTally(name));
    return tallies_.back().second;
  }

  Json finish(const SuiteConfig& c, std::int64_t instances, Json extra = Json::object()) const {
    Json props = Json::array();
    bool passed = true;
    for (const auto& [n, t] : tallies_) {
      props.push_back(t.to_json());
      passed = passed && t.failures() == 0;
    }
    Json out{{"suite", suite_name(c.suite)}, {"seed", c.seed}, {"trials", c.trials}, {"instances", instances}};
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    out["properties"] = props;
    out["passed"] = passed;
    return out;
  }

 private:
  std::vector<std::pair<std::string, PropertyTally>> tallies_;
};

inline Json replay_record(const Instance& inst, const std::string& detail = {}) {
  Json out{{"label", inst.label}, {"trial", inst.trial}, {"seed", inst.seed}, {"edge_list", format_edge_list(inst.graph)}};
  if (!detail.empty()) out["detail"] = detail;
  return out;
}

namespace detail {

/// Runs body, turning any exception into a failure of the "no_exception" property.
template <class F>
void guarded(SuiteReport& rep, const Instance& inst, F&& body) {
  std::string error;
  try {
    body();
  } catch (const std::exception& ex) {
    error = ex.what();
  }
  rep.property("no_exception").record(error.empty(), [&] { return replay_record(inst, error); });
}

inline Json run_lemmas(const SuiteConfig& c) {
  SuiteReport rep;
  const auto instances = suite_instances(c);
  for (const auto& inst : instances) {
    guarded(rep, inst, [&] {
      const Graph& g = inst.graph;
      const std::int64_t n = g.vertex_count();
      const std::int64_t e = g.edge_count();
      const std::int64_t m = g.triangle_count();
      auto ce = [&] { return replay_record(inst); };

      std::int64_t degree_sum = 0;
      std::int64_t ev_sum = 0;
      for (const auto& s : all_local_stats(g)) {
        degree_sum += s.degree;
        ev_sum += s.ev;
      }
      std::int64_t codegree_sum = 0;
      g.for_each_edge([&](int u, int v) { codegree_sum += g.codegree(u, v); });
      rep.property("degree_sum_is_2e").record(degree_sum == 2 * e, ce);
      rep.property("neighbourhood_edges_sum_is_3m").record(ev_sum == 3 * m, ce);
      rep.property("edge_codegree_sum_is_3m").record(codegree_sum == 3 * m, ce);
      rep.property("turan_3e_le_n2").record(turan_check(g), ce);

      if (n >= 1) {
        const auto candidates = neighborhood_candidates(g);
        bool closed_form = true;
        for (int v = 0; v < n; ++v) {
          std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
          g.neighbors(v).for_each([&](int u) { side[static_cast<std::size_t>(u)] = 1; });
          closed_form = closed_form && cut_value(g, side) == candidates[static_cast<std::size_t>(v)];
        }
        rep.property("neighbourhood_candidate_closed_form").record(closed_form, ce);

        const Bipartition nb = neighborhood_cut(g);
        rep.property("lemma_neighbourhood_cut").record(n * n * nb.cut_value >= 4 * e * e - 6 * m * n, ce);
        const Bipartition kf = k4free_cut(g);
        rep.property("lemma_k4free_cut").record(7 * n * n * kf.cut_value >= 2 * e * n * n + 8 * e * e, ce);
        bool refinement_ok = true;
        for (int v = 0; v < n; ++v) {
          const auto cand = refinement_candidate(g, v);
          refinement_ok = refinement_ok && 2 * cand.partition.cut_value >= 2 * cand.inner_cut + e - g.local_stats(v).ev;
        }
        rep.property("refinement_extension_half_edges").record(refinement_ok, ce);
      }
      if (auto best = best_codegree_triangle(g)) {
        rep.property("lemma_codegree_triangle").record(e * best->codegree_sum >= 9 * m, ce);
        auto tc = triangle_4partite_cut(g);
        rep.property("lemma_four_partite_cut").record(tc && 3 * tc->partition.cut_value >= 2 * (e - tc->x_edges), ce);
      }
    });
  }
  return rep.finish(c, static_cast<std::int64_t>(instances.size()));
}

inline Json run_theorem(const SuiteConfig& c) {
  SuiteReport rep;
  const auto instances = suite_instances(c);
  std::int64_t at_floor = 0;
  for (const auto& inst : instances) {
    guarded(rep, inst, [&] {
      const Graph& g = inst.graph;
      const std::int64_t n = g.vertex_count();
      auto ce = [&] { return replay_record(inst); };
      const BipartizeResult r = bipartize(g);
      const auto d = static_cast<std::int64_t>(r.certificate.edges.size());
      rep.property("deletions_at_most_n2_over_9").record(9 * d <= n * n, ce);
      rep.property("certificate_bipartite").record(verify_certificate(g, r.certificate), ce);
      rep.property("deletions_equal_e_minus_cut").record(d == g.edge_count() - r.report.cut_best, ce);
      rep.property("best_cut_meets_k4free_bound").record(Rational(r.report.cut_best) >= r.report.bound_k4free, ce);
      if (r.report.proof_branch == "dense" && r.report.f_of_t)
        rep.property("technical_f_at_most_one_ninth").record(*r.report.f_of_t <= ratio(1, 9), ce);
      at_floor += r.report.at_floor_limit && g.edge_count() > 0;
    });
  }
  return rep.finish(c, static_cast<std::int64_t>(instances.size()), Json{{"at_floor_limit", at_floor}});
}

inline Json run_oracle_equivalence(const SuiteConfig& c) {
  SuiteReport rep;
  const auto instances = suite_instances(c);
  std::int64_t skipped = 0;
  const std::vector<Rational> weights{ratio(1), ratio(4, 3), ratio(69, 50), ratio(2)};
  for (const auto& inst : instances) {
    if (inst.graph.vertex_count() > c.oracle_max_n) {
      ++skipped;
      continue;
    }
    guarded(rep, inst, [&] {
      const Graph& g = inst.graph;
      const std::int64_t n = g.vertex_count();
      auto ce = [&] { return replay_record(inst); };
      const OracleResult oracle = exact_max_cut(g);
      const BipartizeResult r = bipartize(g);
      rep.property("engine_cut_le_oracle").record(r.report.cut_best <= oracle.max_cut, ce);
      rep.property("oracle_deletions_le_certificate").record(oracle.min_deletions <= static_cast<std::int64_t>(r.certificate.edges.size()), ce);
      rep.property("oracle_deletions_at_most_n2_over_9").record(9 * oracle.min_deletions <= n * n, ce);
      if (n >= 1) {
        const Rational opt(oracle.max_cut);
        bool bounds_ok = opt >= r.report.bound_neighborhood && opt >= r.report.bound_k4free &&
                         opt >= r.report.average_neighborhood && opt >= r.report.average_refinement;
        for (const auto& a : weights) bounds_ok = bounds_ok && opt >= combined_lower_bound(g, a);
        rep.property("oracle_dominates_lower_bounds").record(bounds_ok, ce);
      }
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      Rng rng(derive_seed(inst.seed, 0xfeed));
      rng.shuffle(perm);
      rep.property("oracle_relabel_invariant").record(exact_max_cut(g.relabeled(perm)).max_cut == oracle.max_cut, ce);
    });
  }
  return rep.finish(c, static_cast<std::int64_t>(instances.size()),
                    Json{{"oracle_max_n", c.oracle_max_n}, {"skipped", skipped}});
}

inline Json run_exhaustive(const SuiteConfig& c) {
  SuiteReport rep;
  const SweepReport sweep = exhaustive_theorem_sweep(c.sweep_n);
  auto ce = [&] { return Json{{"sweep", to_json(sweep)}}; };
  rep.property("every_k4free_graph_within_n2_over_9").record(sweep.violations == 0, ce);
  if (c.sweep_n % 3 == 0) {
    // the balanced complete 3-partite graph must be the unique maximizer
    const int part = c.sweep_n / 3;
    bool unique = sweep.maximizers.size() == 1 && sweep.maximizers[0].multipartite_parts &&
                  *sweep.maximizers[0].multipartite_parts == std::vector<int>{part, part, part} &&
                  sweep.max_min_deletions * 9 == static_cast<std::int64_t>(c.sweep_n) * c.sweep_n;
    rep.property("unique_balanced_tripartite_maximizer").record(unique, ce);
  }
  return rep.finish(c, 1, Json{{"sweep", to_json(sweep)}});
}

inline Json run_technical(const SuiteConfig& c) {
  SuiteReport rep;
  auto at = [](const Rational& t) { return [t] { return Json{{"t", to_json(t)}}; }; };
  const Rational ninth = ratio(1, 9);
  std::optional<Rational> previous_g;
  for (int k = 0; k <= 500; ++k) {
    const Rational t = ratio(3, 2) + ratio(k, 1000);
    const Rational f = technical_f(t);
    const Rational g = technical_g(t);
    rep.property("f_at_most_one_ninth").record(f <= ninth, at(t));
    rep.property("f_equality_only_at_2").record((f == ninth) == (t == 2), at(t));
    rep.property("factorization_identity").record(f - ninth == (t - 2) * g / (18 * t * t), at(t));
    rep.property("g_strictly_increasing").record(!previous_g || g > *previous_g, at(t));
    previous_g = g;
  }
  rep.property("f_of_2_is_one_ninth").record(technical_f(2) == ninth, at(2));
  rep.property("g_of_three_halves_is_one_quarter").record(technical_g(ratio(3, 2)) == ratio(1, 4), at(ratio(3, 2)));
  rep.property("h_of_one_quarter_is_3_28").record(sparse_deletion_ratio(ratio(1, 4)) == ratio(3, 28), at(ratio(1, 4)));
  std::optional<Rational> previous_h;
  for (int k = 0; k <= 250; ++k) {
    const Rational s = ratio(k, 1000);
    const Rational h = sparse_deletion_ratio(s);
    rep.property("h_nondecreasing_up_to_one_quarter").record(!previous_h || h >= *previous_h, at(s));
    rep.property("h_below_one_ninth").record(h < ninth, at(s));
    previous_h = h;
  }
  rep.property("kr_constant_r4_is_one_ninth").record(kr_conjectured_constant(4) == ninth, at(4));
  return rep.finish(c, 0);
}

/// Independent brute force over all qualifying subset pairs.
inline bool brute_force_regular(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const Rational& eps) {
  const int n = g.vertex_count();
  const Rational base = density(g, VertexSet(n, a), VertexSet(n, b));
  for (std::uint32_t xm = 1; xm < (1U << a.size()); ++xm) {
    std::vector<int> x;
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((xm >> i) & 1U) x.push_back(a[i]);
    if (Rational(static_cast<std::int64_t>(x.size())) <= eps * static_cast<std::int64_t>(a.size())) continue;
    for (std::uint32_t ym = 1; ym < (1U << b.size()); ++ym) {
      std::vector<int> y;
      for (std::size_t i = 0; i < b.size(); ++i)
        if ((ym >> i) & 1U) y.push_back(b[i]);
      if (Rational(static_cast<std::int64_t>(y.size())) <= eps * static_cast<std::int64_t>(b.size())) continue;
      if (abs(density(g, VertexSet(n, x), VertexSet(n, y)) - base) >= eps) return false;
    }
  }
  return true;
}

inline Partition natural_partition(int classes, int t, Rational eps, Rational delta) {
  Partition p;
  p.epsilon = std::move(eps);
  p.delta = std::move(delta);
  for (int i = 0; i < classes; ++i) {
    std::vector<int> cls;
    for (int j = 0; j < t; ++j) cls.push_back(i * t + j);
    p.classes.push_back(std::move(cls));
  }
  return p;
}

inline Json run_regularity(const SuiteConfig& c) {
  SuiteReport rep;
  const std::vector<Rational> epsilons{ratio(1, 10), ratio(1, 5), ratio(1, 3), ratio(1, 2)};
  std::int64_t count = 0;
  for (int trial = 0; trial < c.trials; ++trial) {
    const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(trial));
    Rng rng(seed);
    const int k = rng.between(2, 6);
    const int t = rng.between(1, 3);
    const Graph base = random_k4free_process(k, rng.next());
    Graph g = blowup(base, t);
    const Rational eps = epsilons[rng.below(epsilons.size())];
    Partition p = natural_partition(k, t, eps, ratio(1, 2));
    Instance inst{"blowup_natural_partition", g, trial, seed};
    ++count;
    guarded(rep, inst, [&] {
      auto ce = [&] { return Json{{"instance", replay_record(inst)}, {"partition", to_json(p)}}; };
      const HFreeResult r = hfree_bipartize(g, p);
      rep.property("lift_certificate_bipartite").record(verify_certificate(g, r.certificate), ce);
      rep.property("blowup_reduced_graph_is_base").record(r.reduced.graph == base, ce);
      if (r.equitable && r.regular_partition && p.epsilon <= p.delta && g.vertex_count() % k == 0)
        rep.property("within_accounting_bound").record(r.within_accounting_bound, ce);

      // a noisy pair, checked against the brute force and for symmetry / monotonicity
      const int n_noise = rng.between(2, 5);
      const int m_noise = rng.between(2, 5);
      const Graph noisy = random_gnp(n_noise + m_noise, rng.unit(), rng.next());
      std::vector<int> a(static_cast<std::size_t>(n_noise)), b(static_cast<std::size_t>(m_noise));
      std::iota(a.begin(), a.end(), 0);
      std::iota(b.begin(), b.end(), n_noise);
      const int nn = noisy.vertex_count();
      const VertexSet as(nn, a), bs(nn, b);
      const auto exact = is_epsilon_regular(noisy, as, bs, eps);
      Instance noisy_inst{"noisy_pair", noisy, trial, seed};
      auto nce = [&] { return Json{{"instance", replay_record(noisy_inst)}, {"epsilon", to_json(eps)}}; };
      rep.property("exact_regularity_matches_brute_force").record(exact.counts_as_regular() == brute_force_regular(noisy, a, b, eps), nce);
      rep.property("density_symmetric").record(density(noisy, as, bs) == density(noisy, bs, as), nce);
      rep.property("regularity_symmetric").record(exact.verdict == is_epsilon_regular(noisy, bs, as, eps).verdict, nce);
      bool monotone = true;
      for (const auto& larger : epsilons)
        if (larger >= eps && exact.counts_as_regular()) monotone = monotone && is_epsilon_regular(noisy, as, bs, larger).counts_as_regular();
      rep.property("regularity_monotone_in_epsilon").record(monotone, nce);
      if (exact.verdict == Verdict::irregular)
        rep.property("irregular_witness_deviates").record(abs(exact.witness_density - exact.density) >= eps, nce);
      const auto sampled = is_epsilon_regular(noisy, as, bs, eps, RegularityMode::sampled, {200, seed});
      rep.property("sampled_never_refutes_regular_pair").record(exact.counts_as_regular() ? sampled.counts_as_regular() : true, nce);
    });
  }
  return rep.finish(c, count);
}

inline Json run_regular_split(const SuiteConfig& c) {
  SuiteReport rep;
  std::int64_t count = 0;
  {
    const Graph pg = petersen_graph();
    const Instance inst{"petersen_all_halves", pg};
    guarded(rep, inst, [&] {
      for (std::uint32_t mask = 0; mask < (1U << 10); ++mask) {
        if (std::popcount(mask) != 5) continue;
        VertexSet s(10);
        for (int v = 0; v < 10; ++v)
          if ((mask >> v) & 1U) s.insert(v);
        rep.property("split_edges_balanced").record(regular_split_check(pg, s), [&] {
          return Json{{"instance", replay_record(inst)}, {"half", s.to_vector()}};
        });
      }
    });
    ++count;
  }
  for (int trial = 0; trial < c.trials; ++trial) {
    const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(trial));
    Rng rng(seed);
    const int n = 2 * rng.between(2, 10);
    const int d = rng.between(1, n - 1);
    const Graph g = random_regular(n, d, rng.next());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    order.resize(static_cast<std::size_t>(n / 2));
    const VertexSet s(n, order);
    const Instance inst{"random_regular", g, trial, seed};
    ++count;
    guarded(rep, inst, [&] {
      rep.property("split_edges_balanced").record(regular_split_check(g, s), [&] {
        return Json{{"instance", replay_record(inst)}, {"half", s.to_vector()}};
      });
    });
  }
  return rep.finish(c, count);
}

}  // namespace detail

/// Executes one property suite; the report depends only on the configuration.
inline Json run_suite(const SuiteConfig& c) {
  if (c.trials < 1) throw InputError("trials must be at least 1");
  if (c.min_n < 1 || c.max_n < c.min_n) throw InputError("invalid size range");
  switch (c.suite) {
    case Suite::lemmas: return detail::run_lemmas(c);
    case Suite::theorem: return detail::run_theorem(c);
    case Suite::oracle_equivalence: return detail::run_oracle_equivalence(c);
    case Suite::exhaustive: return detail::run_exhaustive(c);
    case Suite::technical: return detail::run_technical(c);
    case Suite::regularity: return detail::run_regularity(c);
    case Suite::regular_split: return detail::run_regular_split(c);
  }
  throw InputError("unknown suite");
}

}  // namespace k4bip
