#include "json_io.hpp"

#include <string>

namespace scminor {

using json = nlohmann::ordered_json;

json to_json(const MinorModel& m) {
  json sets = json::array();
  for (const VertexSet& s : m.branch_sets) sets.push_back(s.members());
  return {{"k", m.order()}, {"branch_sets", std::move(sets)}};
}

MinorModel minor_model_from_json(const json& j) {
  MinorModel m;
  for (const auto& set : j.at("branch_sets")) m.branch_sets.push_back(VertexSet::from_members(set.get<std::vector<int>>()));
  if (j.at("k").get<int>() != m.order()) throw std::invalid_argument("model k does not match branch set count");
  return m;
}

json to_json(const MinorResult& r) {
  return {{"answer", std::string(to_string(r.answer))},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"expansions", r.expansions}};
}

json to_json(const ContractionPlan& plan) {
  json cycles = json::array();
  for (const CycleMatching& cm : plan.per_cycle) {
    json edges = json::array();
    for (const Edge& e : cm.edges) edges.push_back({e.u, e.v});
    cycles.push_back({{"cycle", cm.cycle}, {"generator", cm.generator}, {"shift", cm.shift}, {"matching", std::move(edges)}});
  }
  return {{"cycles", std::move(cycles)},
          {"fixed_vertex", plan.fixed_vertex ? json(*plan.fixed_vertex) : json(nullptr)}};
}

json to_json(const Certificate& c) {
  return {{"status", std::string(to_string(c.status))},
          {"source", c.source},
          {"model", c.model ? to_json(*c.model) : json(nullptr)}};
}

json to_json(const TopologyReport& r) {
  json apex = json::object();
  for (const auto& [j, result] : r.apex) {
    apex[std::to_string(j)] = {{"holds", result.holds},
                               {"deleted", result.deleted ? json(result.deleted->members()) : json(nullptr)}};
  }
  return {{"outerplanar", r.outerplanar},
          {"planar", r.planar},
          {"il_certificate", to_json(r.il)},
          {"ik_certificate", to_json(r.ik)},
          {"apex_numbers", std::move(apex)},
          {"not_il_by_apex", r.not_il_by_apex()},
          {"not_ik_by_apex", r.not_ik_by_apex()},
          {"indeterminate", r.indeterminate()}};
}

}  // namespace scminor
