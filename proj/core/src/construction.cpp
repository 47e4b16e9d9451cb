#include "scminor/construction.hpp"

#include <algorithm>
#include <string>

#include "scminor/antimorphism.hpp"
#include "scminor/errors.hpp"
#include "scminor/generators.hpp"

namespace scminor {
namespace {

void require_rho_cycle(const Graph& g, const Permutation& rho, std::span<const int> cycle) {
  if (rho.size() != g.order()) throw DomainError("permutation size differs from graph order");
  if (cycle.size() < 2) throw DomainError("cycle must be nontrivial");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] < 0 || cycle[i] >= g.order() || rho(cycle[i]) != cycle[(i + 1) % cycle.size()]) {
      throw DomainError("vertex sequence is not a cycle of rho");
    }
  }
}

std::vector<Edge> shifted_matching(const Graph& g, const Permutation& rho, int generator, int length, int shift) {
  std::vector<Edge> edges;
  int x = generator;
  for (int i = 0; i < length / 2; ++i) {
    const int y = rho.power_apply(x, shift);
    if (!g.has_edge(x, y)) {
      throw ConsistencyError("claimed matching edge {" + std::to_string(x) + "," + std::to_string(y) +
                             "} is missing; rho is not an antimorphism");
    }
    edges.push_back({x, y});
    x = rho(rho(x));
  }
  return edges;
}

std::vector<int> single_cycle(const Permutation& rho) {
  const CycleDecomposition d = cycle_decomposition(rho);
  if (d.cycles.size() != 1 || !d.fixed_points.empty()) {
    throw DomainError("odd shifts are defined only when rho is a single cycle");
  }
  return d.cycles.front();
}

}  // namespace

std::vector<Edge> ContractionPlan::all_edges() const {
  std::vector<Edge> out;
  for (const auto& cm : per_cycle) out.insert(out.end(), cm.edges.begin(), cm.edges.end());
  return out;
}

int choose_generator(const Graph& g, const Permutation& rho, std::span<const int> cycle) {
  require_rho_cycle(g, rho, cycle);
  std::vector<int> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  for (int a : sorted) {
    if (g.has_edge(a, rho(a))) return a;
  }
  throw ConsistencyError("no cycle vertex a with {a, rho(a)} an edge; rho is not an antimorphism");
}

std::vector<Edge> cycle_matching(const Graph& g, const Permutation& rho, std::span<const int> cycle) {
  const int a = choose_generator(g, rho, cycle);
  return shifted_matching(g, rho, a, static_cast<int>(cycle.size()), 1);
}

std::vector<int> valid_odd_shifts(const Graph& g, const Permutation& rho) {
  const std::vector<int> cycle = single_cycle(rho);
  const int a = choose_generator(g, rho, cycle);
  std::vector<int> shifts;
  for (int t = 1; t < g.order(); t += 2) {
    if (g.has_edge(a, rho.power_apply(a, t))) shifts.push_back(t);
  }
  return shifts;
}

std::vector<Edge> odd_shift_matching(const Graph& g, const Permutation& rho, int t) {
  const std::vector<int> cycle = single_cycle(rho);
  const int a = choose_generator(g, rho, cycle);
  const int n = g.order();
  if (t < 1 || t >= n || t % 2 == 0 || !g.has_edge(a, rho.power_apply(a, t))) {
    std::string valid;
    for (int s : valid_odd_shifts(g, rho)) valid += (valid.empty() ? "" : ", ") + std::to_string(s);
    throw InvalidShift("shift " + std::to_string(t) + " does not give an edge from generator " +
                       std::to_string(a) + "; valid shifts: {" + valid + "}");
  }
  return shifted_matching(g, rho, a, n, t);
}

ContractionPlan build_plan(const Graph& g, const Permutation& rho) {
  const CycleDecomposition d = cycle_decomposition(rho);
  if (const SachsCheck sachs = check_sachs(d, g.order()); !sachs.ok) {
    throw DomainError("permutation lacks Sachs cycle structure: " + sachs.reason);
  }
  if (!is_antimorphism(g, rho)) throw DomainError("permutation is not an antimorphism of the graph");

  ContractionPlan plan;
  for (const auto& cycle : d.cycles) {
    const int a = choose_generator(g, rho, cycle);
    plan.per_cycle.push_back({cycle, a, 1, shifted_matching(g, rho, a, static_cast<int>(cycle.size()), 1)});
  }
  if (!d.fixed_points.empty()) plan.fixed_vertex = d.fixed_points.front();
  return plan;
}

MinorModel realize_minor(const Graph& g, const ContractionPlan& plan) {
  MinorModel model;
  for (const Edge& e : plan.all_edges()) model.branch_sets.emplace_back(bit(e.u) | bit(e.v));
  if (plan.fixed_vertex) model.branch_sets.emplace_back(bit(*plan.fixed_vertex));

  const int k = guaranteed_clique_order(g.order());
  if (model.order() != k) {
    throw TheoremViolation("plan yields " + std::to_string(model.order()) + " branch sets, expected " +
                           std::to_string(k));
  }
  if (const ModelCheck check = verify_minor_model(g, model, complete_graph(k)); !check.ok) {
    throw TheoremViolation("constructed model failed verification: " + check.reason);
  }
  return model;
}

std::optional<TheoremConstruction> construct_theorem_minor(const Graph& g) {
  std::optional<Permutation> rho = find_antimorphism(g);
  if (!rho) return std::nullopt;
  ContractionPlan plan = build_plan(g, *rho);
  MinorModel model = realize_minor(g, plan);
  return TheoremConstruction{std::move(*rho), std::move(plan), std::move(model)};
}

std::optional<MinorModel> theorem_minor(const Graph& g) {
  auto built = construct_theorem_minor(g);
  if (!built) return std::nullopt;
  return std::move(built->model);
}

}  // namespace scminor
