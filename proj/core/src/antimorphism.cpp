#include "scminor/antimorphism.hpp"

#include <string>

#include "scminor/errors.hpp"

namespace scminor {

bool is_antimorphism(const Graph& g, const Permutation& p) {
  const int n = g.order();
  if (p.size() != n) return false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) == g.has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

namespace {

// Assigns images to vertices 0, 1, ... in order, trying candidates in
// ascending order, so the first complete assignment is the lex-least one.
class AntimorphismSearch {
 public:
  explicit AntimorphismSearch(const Graph& g) : g_(g), n_(g.order()), image_(n_, -1) {}

  std::optional<Permutation> run() {
    if (extend(0, 0)) return Permutation(image_);
    return std::nullopt;
  }

 private:
  // `used` holds the images already taken by vertices 0..v-1.
  bool extend(int v, Bits used) {
    if (v == n_) return true;
    const int want_degree = n_ - 1 - g_.degree(v);
    // Images of earlier vertices u: rho(v) must be adjacent to rho(u) iff u is not adjacent to v.
    Bits assigned_images = 0;
    Bits required = 0;
    for (int u = 0; u < v; ++u) {
      assigned_images |= bit(image_[u]);
      if (!g_.has_edge(u, v)) required |= bit(image_[u]);
    }
    Bits candidates = g_.vertices() & ~used;
    while (candidates != 0) {
      const int w = lowest(candidates);
      candidates &= candidates - 1;
      if (g_.degree(w) != want_degree) continue;
      if ((g_.neighbors(w) & assigned_images) != required) continue;
      image_[v] = w;
      if (extend(v + 1, used | bit(w))) return true;
    }
    image_[v] = -1;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> image_;
};

}  // namespace

std::optional<Permutation> find_antimorphism(const Graph& g) {
  const int n = g.order();
  if (n % 4 == 2 || n % 4 == 3) return std::nullopt;
  if (4 * g.size() != n * (n - 1)) return std::nullopt;
  return AntimorphismSearch(g).run();
}

SachsCheck check_sachs(const CycleDecomposition& d, int n) {
  std::size_t covered = d.fixed_points.size();
  for (const auto& cycle : d.cycles) covered += cycle.size();
  if (covered != static_cast<std::size_t>(n)) {
    return {false, "decomposition covers " + std::to_string(covered) + " of " + std::to_string(n) + " vertices"};
  }
  if (n % 4 == 2 || n % 4 == 3) {
    return {false, "n = " + std::to_string(n) + " is not 0 or 1 mod 4"};
  }
  for (const auto& cycle : d.cycles) {
    if (cycle.size() % 4 != 0) {
      return {false, "cycle length " + std::to_string(cycle.size()) + " not divisible by 4"};
    }
  }
  const std::size_t want_fixed = n % 4 == 0 ? 0 : 1;
  if (d.fixed_points.size() != want_fixed) {
    return {false, std::to_string(d.fixed_points.size()) + " fixed points, expected " + std::to_string(want_fixed)};
  }
  return {true, {}};
}

SidePartition side_partition(const Graph& g, const Permutation& rho) {
  const int n = g.order();
  if (n % 4 != 0) throw DomainError("side partition needs n = 4k, got n = " + std::to_string(n));
  if (!is_antimorphism(g, rho)) throw DomainError("permutation is not an antimorphism of the graph");
  const int threshold = n / 2;
  SidePartition out{VertexSet{}, VertexSet{}, Graph(n)};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= threshold) {
      out.high.insert(v);
    } else {
      out.low.insert(v);
    }
  }
  for (const Edge& e : g.edges()) {
    if (out.high.contains(e.u) != out.high.contains(e.v)) out.cross.add_edge(e.u, e.v);
  }
  return out;
}

FixedPointReduction remove_fixed_point(const Graph& g, const Permutation& rho) {
  const int n = g.order();
  if (n % 4 != 1) throw DomainError("fixed point removal needs n = 4k+1, got n = " + std::to_string(n));
  const CycleDecomposition d = cycle_decomposition(rho);
  if (d.fixed_points.size() != 1) throw DomainError("antimorphism must have exactly one fixed point");
  const int fixed = d.fixed_points.front();
  VertexSet rest(g.vertices() & ~bit(fixed));
  InducedSubgraph sub = induced_subgraph(g, rest);
  std::vector<int> index(n, -1);
  for (std::size_t i = 0; i < sub.labels.size(); ++i) index[sub.labels[i]] = static_cast<int>(i);
  std::vector<int> image(sub.labels.size());
  for (std::size_t i = 0; i < sub.labels.size(); ++i) image[i] = index[rho(sub.labels[i])];
  return {std::move(sub.graph), Permutation(std::move(image)), std::move(sub.labels), fixed};
}

CycleSideCounts cycle_side_counts(const Graph& g, const Permutation& rho, std::span<const int> cycle) {
  const int n = g.order();
  if (cycle.empty() || cycle.size() % 4 != 0) throw DomainError("cycle length must be a positive multiple of 4");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] < 0 || cycle[i] >= n || rho(cycle[i]) != cycle[(i + 1) % cycle.size()]) {
      throw DomainError("vertex sequence is not closed under rho");
    }
  }

  Bits high = 0;
  Bits cycle_mask = 0;
  std::vector<Bits> neighbors(n, 0);
  if (n % 4 == 0) {
    high = side_partition(g, rho).high.bits();
    for (int v = 0; v < n; ++v) neighbors[v] = g.neighbors(v);
  } else {
    const FixedPointReduction reduced = remove_fixed_point(g, rho);
    const SidePartition sides = side_partition(reduced.graph, reduced.rho);
    for (int i = 0; i < reduced.graph.order(); ++i) {
      const int old = reduced.labels[i];
      if (sides.high.contains(i)) high |= bit(old);
      neighbors[old] = g.neighbors(old) & ~bit(reduced.fixed_vertex);
    }
  }
  for (int v : cycle) cycle_mask |= bit(v);

  CycleSideCounts out;
  for (int v : cycle) {
    const bool is_high = (high & bit(v)) != 0;
    if (is_high) {
      ++out.in_high;
    } else {
      ++out.in_low;
    }
    const Bits other_side = is_high ? (cycle_mask & ~high) : (cycle_mask & high);
    out.cross_degree.push_back(popcount(neighbors[v] & other_side));
  }
  return out;
}

}  // namespace scminor
