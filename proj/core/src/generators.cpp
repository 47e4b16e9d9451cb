#include "scminor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "scminor/antimorphism.hpp"
#include "scminor/canonical.hpp"
#include "scminor/errors.hpp"

namespace scminor {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int p, int q) {
  Graph g(p + q);
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) g.add_edge(u, p + v);
  }
  return g;
}

Graph path_graph(int k) {
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k > 0 && k < 3) throw DomainError("a simple cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  if (k >= 3) g.add_edge(k - 1, 0);
  return g;
}

Graph sharp_4n(int n) {
  if (n < 1) throw DomainError("sharp_4n requires n >= 1");
  if (4 * n > kMaxVertices) throw CapacityError("sharp_4n(" + std::to_string(n) + ") exceeds 64 vertices");
  Graph g(4 * n);
  const int w = 2 * n;
  for (int u = 0; u < 2 * n; ++u) {
    for (int v = u + 1; v < 2 * n; ++v) g.add_edge(u, v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g.add_edge(i, w + j);
      g.add_edge(n + i, w + n + j);
    }
  }
  return g;
}

Graph sharp_4n_plus_1(int n) {
  if (n < 0) throw DomainError("sharp_4n_plus_1 requires n >= 0");
  if (n == 0) return Graph(1);
  const Graph base = sharp_4n(n);
  Graph g(4 * n + 1);
  for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
  for (int v = 0; v < 2 * n; ++v) g.add_edge(4 * n, v);
  return g;
}

namespace {

// Partitions of `total` into parts that are multiples of 4, each part <= cap,
// emitted in lexicographically decreasing order.
void multiple_of_four_partitions(int total, int cap, CycleType& prefix, std::vector<CycleType>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, cap); part >= 4; part -= 4) {
    prefix.push_back(part);
    multiple_of_four_partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CycleType> sachs_cycle_types(int n) {
  std::vector<CycleType> out;
  if (n < 0 || n % 4 == 2 || n % 4 == 3) return out;
  const int cycled = n - n % 4;
  CycleType prefix;
  if (cycled == 0) {
    out.emplace_back();
  } else {
    multiple_of_four_partitions(cycled, cycled, prefix, out);
  }
  if (n % 4 == 1) {
    for (auto& type : out) type.push_back(1);
  }
  return out;
}

Permutation representative_permutation(int n, const CycleType& type) {
  if (std::accumulate(type.begin(), type.end(), 0) != n) throw DomainError("cycle type does not sum to n");
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : type) {
    if (len < 1) throw DomainError("cycle lengths must be positive");
    std::vector<int> cycle(len);
    std::iota(cycle.begin(), cycle.end(), next);
    next += len;
    if (len > 1) cycles.push_back(std::move(cycle));
  }
  // Fixed points sort last so that the fixed point of a 4k+1 type is n-1.
  return Permutation::from_cycles(n, cycles);
}

std::vector<std::vector<Edge>> pair_orbits(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  std::vector<std::vector<Edge>> orbits;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (seen[u][v]) continue;
      std::vector<Edge> orbit;
      Edge e{u, v};
      while (!seen[e.u][e.v]) {
        seen[e.u][e.v] = true;
        orbit.push_back(e);
        const int a = sigma(e.u);
        const int b = sigma(e.v);
        e = {std::min(a, b), std::max(a, b)};
      }
      orbits.push_back(std::move(orbit));
    }
  }
  // Traversal order above is column-major; reorder by least pair (u, v).
  for (auto& orbit : orbits) {
    const auto least = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), least, orbit.end());
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

OrbitAssignment OrbitAssignment::for_permutation(const Permutation& sigma) {
  OrbitAssignment a{sigma, {}, {}};
  for (const auto& orbit : pair_orbits(sigma)) a.orbit_reps.push_back(orbit.front());
  a.choices.assign(a.orbit_reps.size(), false);
  return a;
}

OrbitAssignment OrbitAssignment::from_counter(const Permutation& sigma, std::uint64_t counter) {
  OrbitAssignment a = for_permutation(sigma);
  for (std::size_t i = 0; i < a.choices.size() && i < 64; ++i) a.choices[i] = ((counter >> i) & 1U) != 0;
  return a;
}

Graph sc_from_assignment(const OrbitAssignment& a) {
  const int n = a.sigma.size();
  if (const SachsCheck sachs = check_sachs(cycle_decomposition(a.sigma), n); !sachs.ok) {
    throw DomainError("sigma lacks Sachs cycle structure: " + sachs.reason);
  }
  const auto orbits = pair_orbits(a.sigma);
  if (a.orbit_reps.size() != orbits.size() || a.choices.size() != orbits.size()) {
    throw DomainError("assignment has " + std::to_string(a.choices.size()) + " choices for " +
                      std::to_string(orbits.size()) + " orbits");
  }
  Graph g(n);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& orbit = orbits[i];
    if (orbit.front() != a.orbit_reps[i]) throw DomainError("orbit representative mismatch at index " + std::to_string(i));
    if (orbit.size() % 2 != 0) throw DomainError("pair orbit of odd length " + std::to_string(orbit.size()));
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      if (a.choices[i] == (j % 2 == 0)) g.add_edge(orbit[j].u, orbit[j].v);
    }
  }
  return g;
}

std::vector<Graph> enumerate_sc(int n, EnumerateOptions options) {
  const bool small = n == 1 || n == 4 || n == 5 || n == 8 || n == 9;
  const bool large = n == 12 || n == 13;
  if (!small && !large) throw DomainError("enumeration supports n in {1,4,5,8,9,12,13}, got " + std::to_string(n));
  if (large && !options.allow_large) throw DomainError("n = " + std::to_string(n) + " needs the large-run option");

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const CycleType& type : sachs_cycle_types(n)) {
    const Permutation sigma = representative_permutation(n, type);
    OrbitAssignment a = OrbitAssignment::for_permutation(sigma);
    const std::uint64_t count = std::uint64_t{1} << a.choices.size();
    for (std::uint64_t counter = 0; counter < count; ++counter) {
      for (std::size_t i = 0; i < a.choices.size(); ++i) a.choices[i] = ((counter >> i) & 1U) != 0;
      Graph g = sc_from_assignment(a);
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

RandomSc random_sc(int n, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices || n % 4 == 2 || n % 4 == 3) {
    throw DomainError("random self-complementary graphs need n = 0 or 1 mod 4 and n <= 64, got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  const std::vector<CycleType> types = sachs_cycle_types(n);
  const CycleType& type = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
  const Permutation base = representative_permutation(n, type);

  OrbitAssignment a = OrbitAssignment::for_permutation(base);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < a.choices.size(); ++i) a.choices[i] = coin(rng);
  const Graph g = sc_from_assignment(a);

  std::vector<int> relabeling(n);
  std::iota(relabeling.begin(), relabeling.end(), 0);
  std::shuffle(relabeling.begin(), relabeling.end(), rng);
  // sigma' = pi . sigma . pi^-1 is an antimorphism of the relabeled graph.
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[relabeling[v]] = relabeling[base(v)];
  return {relabel(g, relabeling), Permutation(std::move(image))};
}

}  // namespace scminor
