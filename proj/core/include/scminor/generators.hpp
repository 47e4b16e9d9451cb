#pragma once

#include <cstdint>
#include <vector>

#include "scminor/graph.hpp"
#include "scminor/permutation.hpp"

namespace scminor {

Graph empty_graph(int n);
Graph complete_graph(int k);
/// Parts are 0..p-1 and p..p+q-1.
Graph complete_bipartite(int p, int q);
Graph path_graph(int k);
Graph cycle_graph(int k);

/// Self-complementary graph on 4n vertices with no K_{2n+1} minor: a clique
/// on 0..2n-1, an independent set on 2n..4n-1, and complete bipartite blocks
/// {0..n-1}x{2n..3n-1} and {n..2n-1}x{3n..4n-1}. Requires n >= 1.
Graph sharp_4n(int n);

/// sharp_4n(n) plus vertex 4n adjacent to the clique. n = 0 gives K1.
Graph sharp_4n_plus_1(int n);

/// Nontrivial cycle lengths in decreasing order, followed by 1 for the fixed
/// point when n = 4k+1.
using CycleType = std::vector<int>;

/// All cycle types allowed for an antimorphism on n vertices, lexicographically
/// decreasing (n = 8: [8], [4,4]). Empty when n is 2 or 3 mod 4.
std::vector<CycleType> sachs_cycle_types(int n);

/// Cycles on consecutive labels in the order given; the fixed point is n-1.
Permutation representative_permutation(int n, const CycleType& type);

/// Orbits of sigma acting on unordered pairs. Each orbit lists its least pair
/// first and then successive sigma-images; orbits are ordered by least pair.
std::vector<std::vector<Edge>> pair_orbits(const Permutation& sigma);

struct OrbitAssignment {
  Permutation sigma;
  std::vector<Edge> orbit_reps;  ///< first pair of each orbit of pair_orbits(sigma)
  std::vector<bool> choices;     ///< true: representative pair is an edge

  /// All choices false.
  static OrbitAssignment for_permutation(const Permutation& sigma);
  /// choices[i] = bit i of `counter`.
  static OrbitAssignment from_counter(const Permutation& sigma, std::uint64_t counter);
};

/// Graph in which edges alternate along every sigma-orbit of pairs, so sigma
/// is an antimorphism. Throws DomainError if sigma lacks Sachs structure or
/// the assignment does not match sigma's orbits.
Graph sc_from_assignment(const OrbitAssignment& a);

struct EnumerateOptions {
  bool allow_large = false;  ///< required for n = 12, 13
};

/// One self-complementary graph per isomorphism class, for n in
/// {1, 4, 5, 8, 9} (and {12, 13} with allow_large). Deterministic order:
/// cycle types as in sachs_cycle_types, then assignment counter ascending.
std::vector<Graph> enumerate_sc(int n, EnumerateOptions options = {});

struct RandomSc {
  Graph graph;
  Permutation sigma;  ///< an antimorphism of graph with the drawn cycle type
};

/// Uniform cycle type, uniform orbit choices, then a uniform relabeling.
/// Deterministic for a fixed seed. Requires n = 0 or 1 mod 4, n <= 64.
RandomSc random_sc(int n, std::uint64_t seed);

}  // namespace scminor
