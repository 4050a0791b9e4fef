#include "bergek4/json.hpp"

#include <stdexcept>

namespace bergek4 {

using nlohmann::json;

void to_json(json& j, const Triple& t) { j = json::array({t[0], t[1], t[2]}); }

void to_json(json& j, const TripleSystem& h) {
  j = json::array();
  for (const Triple& t : h.edges()) j.push_back(t);
}

void to_json(json& j, const Graph& g) {
  j = json::array();
  for (const Pair& p : g.edges()) j.push_back(json::array({p.first, p.second}));
}

void to_json(json& j, const BergeEmbedding& e) {
  json assignment = json::array();
  for (const auto& [pair, triple] : e.assignment) {
    assignment.push_back({{"pair", json::array({pair.first, pair.second})}, {"triple", triple}});
  }
  j = {{"core", e.core}, {"assignment", std::move(assignment)}};
}

BergeEmbedding embedding_from_json(const json& j) {
  BergeEmbedding e;
  e.core = j.at("core").get<std::vector<Vertex>>();
  for (const auto& a : j.at("assignment")) {
    const auto pair = a.at("pair").get<std::vector<Vertex>>();
    const auto triple = a.at("triple").get<std::vector<Vertex>>();
    if (pair.size() != 2 || triple.size() != 3) throw std::invalid_argument("malformed assignment entry");
    e.assignment.emplace_back(Pair(pair[0], pair[1]), Triple(triple[0], triple[1], triple[2]));
  }
  return e;
}

void to_json(json& j, const TraceMultigraph& t) {
  json loops = json::array();
  for (const TraceLoop& l : t.loops()) loops.push_back({{"v", l.v}, {"label", json::array({l.label.first, l.label.second})}});
  json links = json::array();
  for (const TraceLink& l : t.links()) {
    links.push_back({{"u", l.ends.first}, {"v", l.ends.second}, {"label", json::array({l.label})}});
  }
  j = {{"core", t.core()}, {"loops", std::move(loops)}, {"links", std::move(links)}};
}

namespace {

json rational_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

}  // namespace

void to_json(json& j, const BoundReport& r) {
  json bad = json::array();
  for (const auto& c : r.bad_components) {
    bad.push_back({{"vertices", c.component.vertices},
                   {"surplus", c.component.surplus},
                   {"shape", to_string(c.cls.shape)},
                   {"m", c.cls.m}});
  }
  j = {
      {"n", r.n},
      {"anchor", {{"labels", r.anchor.labels}, {"x", r.anchor.x}, {"y", r.anchor.y}}},
      {"total_surplus", r.total_surplus},
      {"bad_surplus", r.bad_surplus},
      {"good_surplus", r.good_surplus},
      {"bad_components", std::move(bad)},
      {"m", r.m},
      {"p", r.p},
      {"q", r.q},
      {"unclassified", r.unclassified},
      {"rho", r.rho},
      {"alpha", rational_json(r.alpha)},
      {"U", r.uncovered},
      {"count_inequality_holds", r.count_inequality_holds},
      {"surplus_bound_holds", r.surplus_bound_holds},
      {"min_degree_hypothesis", r.min_degree_hypothesis},
      {"M", r.lower_bound_m},
      {"gstar_u_edges", r.gstar_u_edges},
      {"lower_bound_holds", r.lower_bound_holds},
      {"turan_rhs", rational_json(r.turan_rhs)},
      {"turan_condition_holds", r.turan_condition_holds},
      {"gstar_u_has_k4", r.gstar_u_has_k4},
      {"taxonomy_complete", r.taxonomy_complete()},
  };
}

void to_json(json& j, const SearchConfig& c) {
  j = {{"iso_depth", c.iso_depth},
       {"workers", c.workers},
       {"node_budget", c.node_budget},
       {"seed_construction", c.seed_construction},
       {"bound_pruning", c.bound_pruning},
       {"order", c.order == BranchOrder::Lexicographic ? "lex" : "degree-greedy"}};
}

void to_json(json& j, const SearchResult& r) {
  j = {{"n", r.n},
       {"value", r.value},
       {"exhausted", r.exhausted},
       {"nodes", r.stats.nodes}};
  std::visit([&](const auto& w) { j["witness"] = w; }, r.witness);
}

void to_json(json& j, const Certification& c) {
  j = {{"n", c.n},
       {"spec", c.spec},
       {"claimed", c.claimed},
       {"outcome", to_string(c.outcome)},
       {"value", c.result.value},
       {"exhausted", c.result.exhausted},
       {"nodes", c.result.stats.nodes},
       {"config", c.config}};
  std::visit([&](const auto& w) { j["witness"] = w; }, c.result.witness);
}

}  // namespace bergek4
