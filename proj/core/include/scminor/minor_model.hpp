#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scminor/graph.hpp"

namespace scminor {

/// Branch sets witnessing that a target graph is a minor of a host: branch
/// set i stands for target vertex i.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  int order() const { return static_cast<int>(branch_sets.size()); }
  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

struct ModelCheck {
  bool ok = false;
  /// First target edge {i, j} with no host edge between branch sets i and j.
  std::optional<std::pair<int, int>> violated_pair;
  std::string reason;
};

/// Checks the minor definition directly: one nonempty, connected branch set
/// per target vertex, pairwise disjoint, and a host edge between the branch
/// sets of every target edge.
ModelCheck verify_minor_model(const Graph& host, const MinorModel& model, const Graph& target);

/// True iff some host edge joins the two vertex sets.
bool sets_adjacent(const Graph& host, Bits a, Bits b);

}  // namespace scminor
