#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scminor/graph.hpp"
#include "scminor/permutation.hpp"

namespace scminor {

/// True iff {u,v} is an edge exactly when {p(u),p(v)} is not, for all pairs.
bool is_antimorphism(const Graph& g, const Permutation& p);

/// Lexicographically least image array of an isomorphism g -> complement(g),
/// or nullopt when g is not self-complementary.
std::optional<Permutation> find_antimorphism(const Graph& g);

struct SachsCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Cycle-type test for antimorphisms: every nontrivial cycle length is a
/// multiple of 4, with no fixed point for n = 4k and exactly one for n = 4k+1.
SachsCheck check_sachs(const CycleDecomposition& d, int n);

/// Degree split of a self-complementary graph on 4k vertices.
struct SidePartition {
  VertexSet high;  ///< degree >= 2k
  VertexSet low;   ///< degree <= 2k-1
  Graph cross;     ///< edges of g with one end in each side, on all 4k vertices
};

/// Requires n = 4k and `rho` an antimorphism of g (DomainError otherwise).
SidePartition side_partition(const Graph& g, const Permutation& rho);

/// g and rho with the unique fixed point of an n = 4k+1 antimorphism removed.
struct FixedPointReduction {
  Graph graph;
  Permutation rho;
  std::vector<int> labels;  ///< labels[new] = old
  int fixed_vertex = -1;
};

FixedPointReduction remove_fixed_point(const Graph& g, const Permutation& rho);

struct CycleSideCounts {
  int in_high = 0;
  int in_low = 0;
  /// cross_degree[i]: neighbours of cycle[i] on the other side, within the cycle.
  std::vector<int> cross_degree;
};

/// Side membership of a 4k-cycle of rho. For odd n the sides are taken in g
/// minus the fixed point. Throws DomainError if `cycle` is not a rho-cycle.
CycleSideCounts cycle_side_counts(const Graph& g, const Permutation& rho, std::span<const int> cycle);

}  // namespace scminor
