#pragma once

#include <string>
#include <vector>

#include "scminor/graph.hpp"

namespace scminor {

inline constexpr int kCanonicalMaxOrder = 16;

/// Relabeling (old -> new) that maps every graph of an isomorphism class to
/// the same labeled graph. Throws CapacityError above kCanonicalMaxOrder.
std::vector<int> canonical_labeling(const Graph& g);

/// graph6 encoding of the canonically relabeled graph. Equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace scminor
