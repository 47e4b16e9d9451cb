#pragma once

#include <optional>
#include <span>
#include <vector>

#include "scminor/graph.hpp"
#include "scminor/minor_model.hpp"
#include "scminor/permutation.hpp"

namespace scminor {

/// Contraction edges for one nontrivial cycle of an antimorphism rho:
/// {rho^(2i)(a), rho^(2i+shift)(a)} for i = 0 .. len/2 - 1.
struct CycleMatching {
  std::vector<int> cycle;  ///< as listed by cycle_decomposition
  int generator = -1;      ///< a
  int shift = 1;           ///< odd
  std::vector<Edge> edges;
};

struct ContractionPlan {
  std::vector<CycleMatching> per_cycle;
  std::optional<int> fixed_vertex;  ///< set iff n = 4k+1

  std::vector<Edge> all_edges() const;
};

/// Order of the clique minor every self-complementary graph on n vertices has.
constexpr int guaranteed_clique_order(int n) { return (n + 1) / 2; }

/// Least vertex a on the cycle with {a, rho(a)} an edge.
/// Throws ConsistencyError if there is none (rho is not an antimorphism).
int choose_generator(const Graph& g, const Permutation& rho, std::span<const int> cycle);

/// The shift-1 matching of a cycle from its chosen generator.
std::vector<Edge> cycle_matching(const Graph& g, const Permutation& rho, std::span<const int> cycle);

/// Odd shifts t in [1, n-1] with {a, rho^t(a)} an edge, for rho a single
/// n-cycle and a its chosen generator.
std::vector<int> valid_odd_shifts(const Graph& g, const Permutation& rho);

/// General-shift matching for rho a single n-cycle. Throws InvalidShift
/// (listing the valid shifts) when t is even, out of range, or not an edge.
std::vector<Edge> odd_shift_matching(const Graph& g, const Permutation& rho, int t);

/// Shift-1 matchings of every nontrivial cycle, taken simultaneously.
/// Requires rho to be an antimorphism with Sachs cycle structure.
ContractionPlan build_plan(const Graph& g, const Permutation& rho);

/// Matched pairs in plan order, then the fixed vertex as a singleton. The
/// result is verified as a complete-graph model before it is returned;
/// failure throws TheoremViolation.
MinorModel realize_minor(const Graph& g, const ContractionPlan& plan);

struct TheoremConstruction {
  Permutation rho;
  ContractionPlan plan;
  MinorModel model;
};

/// Full pipeline: antimorphism, plan, verified model. nullopt iff g is not
/// self-complementary.
std::optional<TheoremConstruction> construct_theorem_minor(const Graph& g);

/// Model of K_{floor((n+1)/2)}, or nullopt iff g is not self-complementary.
std::optional<MinorModel> theorem_minor(const Graph& g);

}  // namespace scminor
