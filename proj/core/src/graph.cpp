#include "scminor/graph.hpp"

#include <string>

#include "scminor/errors.hpp"

namespace scminor {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_members(std::span<const int> members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= kMaxVertices) throw RangeError("vertex " + std::to_string(v) + " out of range");
  bits_ |= bit(v);
}

void VertexSet::erase(int v) {
  if (v >= 0 && v < kMaxVertices) bits_ &= ~bit(v);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

int Graph::size() const {
  int twice = 0;
  for (Bits b : adj_) twice += popcount(b);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw RangeError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for_each_bit(neighbors(u) & ~prefix_mask(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

int Graph::edges_within(Bits s) const {
  int twice = 0;
  for_each_bit(s & vertices(), [&](int v) { twice += popcount(neighbors(v) & s); });
  return twice / 2;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if ((s.bits() & ~g.vertices()) != 0) {
    throw RangeError("vertex set exceeds graph of order " + std::to_string(g.order()));
  }
  InducedSubgraph out{Graph(s.size()), s.members()};
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.labels.size(); ++i) index[out.labels[i]] = static_cast<int>(i);
  for (const Edge& e : g.edges()) {
    const int a = index[e.u];
    const int b = index[e.v];
    if (a >= 0 && b >= 0) out.graph.add_edge(a, b);
  }
  return out;
}

Contraction contract_matching(const Graph& g, std::span<const Edge> matching) {
  const int n = g.order();
  std::vector<int> branch(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (const Edge& e : matching) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v || !g.has_edge(e.u, e.v)) {
      throw InvalidMatching("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge of the graph");
    }
    auto& bu = branch[e.u];
    auto& bv = branch[e.v];
    if (bu >= 0 || bv >= 0) {
      throw InvalidMatching("matching edges overlap at {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
    }
    bu = bv = next++;
  }
  for (int v = 0; v < n; ++v) {
    if (branch[v] < 0) branch[v] = next++;
  }
  Contraction out{Graph(next), std::move(branch)};
  for (const Edge& e : g.edges()) {
    const int a = out.branch_of[e.u];
    const int b = out.branch_of[e.v];
    if (a != b) out.graph.add_edge(a, b);
  }
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  Graph out(n1 + n2);
  for (const Edge& e : g1.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) out.add_edge(e.u + n1, e.v + n1);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw DomainError("relabeling has wrong length");
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[e.u], perm[e.v]);
  }
  return out;
}

bool is_connected(const Graph& g, Bits s) {
  s &= g.vertices();
  if (s == 0) return false;
  Bits seen = bit(lowest(s));
  Bits frontier = seen;
  while (frontier != 0) {
    Bits next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace scminor
