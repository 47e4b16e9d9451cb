#include "scminor/minor_model.hpp"

namespace scminor {

bool sets_adjacent(const Graph& host, Bits a, Bits b) {
  bool found = false;
  for_each_bit(a, [&](int v) { found = found || (host.neighbors(v) & b) != 0; });
  return found;
}

ModelCheck verify_minor_model(const Graph& host, const MinorModel& model, const Graph& target) {
  if (model.order() != target.order()) {
    return {false, std::nullopt,
            "model has " + std::to_string(model.order()) + " branch sets, target has " +
                std::to_string(target.order()) + " vertices"};
  }
  Bits used = 0;
  for (int i = 0; i < model.order(); ++i) {
    const Bits s = model.branch_sets[i].bits();
    const std::string label = "branch set " + std::to_string(i);
    if (s == 0) return {false, std::nullopt, label + " is empty"};
    if ((s & ~host.vertices()) != 0) return {false, std::nullopt, label + " leaves the host vertex range"};
    if ((s & used) != 0) return {false, std::nullopt, label + " overlaps an earlier branch set"};
    if (!is_connected(host, s)) return {false, std::nullopt, label + " is not connected"};
    used |= s;
  }
  for (const Edge& e : target.edges()) {
    if (!sets_adjacent(host, model.branch_sets[e.u].bits(), model.branch_sets[e.v].bits())) {
      return {false, std::make_pair(e.u, e.v),
              "no host edge between branch sets " + std::to_string(e.u) + " and " + std::to_string(e.v)};
    }
  }
  return {true, std::nullopt, {}};
}

}  // namespace scminor
