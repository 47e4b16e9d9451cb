#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace scminor {

using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Bits bit(int v) { return Bits{1} << v; }
constexpr int popcount(Bits b) { return std::popcount(b); }
constexpr int lowest(Bits b) { return std::countr_zero(b); }
constexpr Bits prefix_mask(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

/// Calls fn(v) for each set bit v in ascending order.
template <typename Fn>
constexpr void for_each_bit(Bits b, Fn&& fn) {
  while (b != 0) {
    fn(lowest(b));
    b &= b - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A subset of the vertex range 0..63.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);
  static VertexSet from_members(std::span<const int> members);

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && (bits_ & bit(v)) != 0; }
  constexpr int size() const { return popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  void insert(int v);
  void erase(int v);
  std::vector<int> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Bits bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  bool has_edge(int u, int v) const;
  Bits neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  Bits vertices() const { return prefix_mask(order()); }

  /// Adds {u, v}; adding an existing edge is a no-op. Loops are rejected.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  /// Number of edges with both ends in `s`.
  int edges_within(Bits s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<Bits> adj_;
};

struct InducedSubgraph {
  Graph graph;
  /// labels[new] = old vertex label.
  std::vector<int> labels;
};

struct Contraction {
  Graph graph;
  /// branch_of[old] = new vertex label.
  std::vector<int> branch_of;
};

Graph complement(const Graph& g);

/// Vertices of `s` relabeled 0..|s|-1 in ascending order of their old labels.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Contracts a set of pairwise disjoint edges. Matched pairs become vertices
/// 0..|m|-1 in matching order; unmatched vertices follow in ascending order.
Contraction contract_matching(const Graph& g, std::span<const Edge> matching);

/// Disjoint union plus every edge between the two parts; g2 is shifted by |g1|.
Graph join(const Graph& g1, const Graph& g2);

/// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// True iff `s` is nonempty and induces a connected subgraph.
bool is_connected(const Graph& g, Bits s);

}  // namespace scminor
