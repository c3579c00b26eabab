#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "k4bip/cut_engine.hpp"
#include "k4bip/edge_list_io.hpp"
#include "k4bip/errors.hpp"
#include "k4bip/oracle.hpp"
#include "k4bip/rational.hpp"
#include "k4bip/regularity.hpp"

namespace k4bip {

using Json = nlohmann::ordered_json;

// Rationals are {"num": int, "den": int}. Components outside the int64 range
// are written as decimal strings.
inline Json to_json(const Rational& r) {
  auto component = [](const BigInt& x) -> Json {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(x);
    return x.str();
  };
  return Json{{"num", component(numerator_of(r))}, {"den", component(denominator_of(r))}};
}

/// Accepts {"num": .., "den": ..}, an integer, or a string "p/q" / "1.38".
inline Rational rational_from_json(const Json& j) {
  auto component = [](const Json& c) -> BigInt {
    if (c.is_number_integer()) return BigInt(c.get<std::int64_t>());
    if (c.is_string()) return numerator_of(parse_rational(c.get<std::string>()));
    throw InputError("rational component must be an integer");
  };
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) throw InputError("rational object needs 'num' and 'den'");
    BigInt den = component(j.at("den"));
    if (den == 0) throw InputError("zero denominator");
    return Rational(component(j.at("num")), den);
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational");
}

inline Json optional_json(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }
inline Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline Json to_json(const Bipartition& b) {
  Json side = Json::array();
  for (auto s : b.side) side.push_back(static_cast<int>(s));
  return Json{{"cut_value", b.cut_value}, {"side", side}, {"deletion_edges", to_json(b.deletion_set)}};
}

inline Json to_json(const BoundReport& r) {
  Json tri = r.source_triangle ? Json{r.source_triangle->u, r.source_triangle->v, r.source_triangle->w} : Json(nullptr);
  return Json{
      {"n", r.n},
      {"e", r.e},
      {"m", r.m},
      {"t", to_json(r.t)},
      {"density", to_json(r.density)},
      {"proof_branch", r.proof_branch},
      {"bounds",
       {{"four_partite", optional_json(r.bound_4partite)},
        {"codegree", optional_json(r.bound_codegree)},
        {"neighborhood", to_json(r.bound_neighborhood)},
        {"neighborhood_average", to_json(r.average_neighborhood)},
        {"refinement_average", to_json(r.average_refinement)},
        {"k4free", to_json(r.bound_k4free)},
        {"combined", to_json(r.bound_combined)},
        {"combined_weight", to_json(r.combined_weight)}}},
      {"cuts",
       {{"neighborhood", r.cut_neighborhood},
        {"k4free_refine", r.cut_k4free},
        {"triangle_4partite", optional_json(r.cut_triangle_4partite)},
        {"best", r.cut_best}}},
      {"codegree_sum", optional_json(r.codegree_sum)},
      {"source_triangle", tri},
      {"x_size", optional_json(r.x_size)},
      {"x_edges", optional_json(r.x_edges)},
      {"f_of_t", optional_json(r.f_of_t)},
      {"g_of_t", optional_json(r.g_of_t)},
      {"h_of_density", to_json(r.h_of_density)},
      {"deletions", r.deletions},
      {"deletion_limit", to_json(r.deletion_limit)},
      {"at_floor_limit", r.at_floor_limit},
  };
}

inline Json to_json(const DeletionCertificate& c) {
  return Json{{"method", std::string(method_name(c.method))},
              {"claimed_bound", to_json(c.claimed_bound)},
              {"deletion_edges", to_json(c.edges)}};
}

/// The combined document emitted by `analyze --json`.
inline Json to_json(const BipartizeResult& r) {
  Json out = to_json(r.report);
  out["method"] = std::string(method_name(r.certificate.method));
  out["claimed_bound"] = to_json(r.certificate.claimed_bound);
  out["deletion_edges"] = to_json(r.certificate.edges);
  return out;
}

inline Json to_json(const OracleResult& r) {
  return Json{{"max_cut", r.max_cut}, {"min_deletions", r.min_deletions}, {"witness", to_json(r.witness)}};
}

inline Json to_json(const SweepReport& r) {
  Json hist = Json::object();
  for (const auto& [d, c] : r.deletion_histogram) hist[std::to_string(d)] = c;
  Json maxes = Json::array();
  for (const auto& m : r.maximizers) {
    Json parts = m.multipartite_parts ? Json(*m.multipartite_parts) : Json(nullptr);
    maxes.push_back({{"canonical_code", m.canonical_code},
                     {"edges", to_json(m.representative.edges())},
                     {"labeled_count", m.labeled_count},
                     {"complete_multipartite_parts", parts}});
  }
  return Json{{"n", r.n},
              {"graphs", r.graphs},
              {"k4_free", r.k4_free},
              {"violations", r.violations},
              {"max_min_deletions", r.max_min_deletions},
              {"deletion_histogram", hist},
              {"maximizers", maxes}};
}

inline Json to_json(const PairClassification& c) {
  Json out{{"pair", {c.i, c.j}},
           {"density", to_json(c.density)},
           {"verdict", std::string(verdict_name(c.verdict))},
           {"mode", c.mode == RegularityMode::exact ? "exact" : "sampled"},
           {"certified", c.verdict != Verdict::sampled_regular}};
  if (c.verdict == Verdict::irregular)
    out["witness"] = {{"x", c.witness_x}, {"y", c.witness_y}, {"density", to_json(c.witness_density)}};
  return out;
}

inline Json to_json(const HFreeResult& r) {
  Json pairs = Json::array();
  for (const auto& c : r.reduced.pairs) pairs.push_back(to_json(c));
  return Json{{"method", std::string(method_name(r.certificate.method))},
              {"deletions", static_cast<std::int64_t>(r.certificate.edges.size())},
              {"breakdown",
               {{"intra_class", r.intra_class},
                {"irregular_pairs", r.irregular_pairs},
                {"sparse_pairs", r.sparse_pairs},
                {"lifted", r.lifted}}},
              {"accounting_bound", to_json(r.accounting_bound)},
              {"within_accounting_bound", r.within_accounting_bound},
              {"equitable", r.equitable},
              {"regular_partition", r.regular_partition},
              {"reduced_graph", {{"k", r.reduced.graph.vertex_count()}, {"edges", to_json(r.reduced.graph.edges())}}},
              {"reduced_deletions", to_json(r.reduced_certificate.edges)},
              {"pairs", pairs},
              {"deletion_edges", to_json(r.certificate.edges)}};
}

/// Partition document: {"classes": [[0,1,..], ...], "epsilon": R, "delta": R}.
/// A bare array of classes is also accepted (epsilon 1/10, delta 1/2).
inline Partition partition_from_json(const Json& j) {
  Partition p;
  const Json* classes = &j;
  if (j.is_object()) {
    if (!j.contains("classes")) throw InputError("partition document needs 'classes'");
    classes = &j.at("classes");
    if (j.contains("epsilon")) p.epsilon = rational_from_json(j.at("epsilon"));
    if (j.contains("delta")) p.delta = rational_from_json(j.at("delta"));
  }
  if (!classes->is_array()) throw InputError("'classes' must be a list of vertex-id lists");
  for (const auto& cls : *classes) {
    if (!cls.is_array()) throw InputError("each class must be a list of vertex ids");
    std::vector<int> ids;
    for (const auto& v : cls) {
      if (!v.is_number_integer()) throw InputError("vertex ids must be integers");
      ids.push_back(v.get<int>());
    }
    p.classes.push_back(std::move(ids));
  }
  return p;
}

inline Json to_json(const Partition& p) {
  return Json{{"classes", p.classes}, {"epsilon", to_json(p.epsilon)}, {"delta", to_json(p.delta)}};
}

}  // namespace k4bip
