#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "scminor/graph.hpp"
#include "scminor/minor_model.hpp"

namespace scminor {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class Answer { yes, no, budget_exceeded };

std::string_view to_string(Answer a);

/// Node-expansion allowance shared by every search that draws on it.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  /// Consumes one expansion; false once the limit is reached.
  bool spend() { return used_.fetch_add(1, std::memory_order_relaxed) < limit_; }
  std::uint64_t used() const {
    const std::uint64_t u = used_.load(std::memory_order_relaxed);
    return u < limit_ ? u : limit_;
  }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

struct MinorQuery {
  Graph host;
  Graph target;
  std::uint64_t budget = kDefaultBudget;  ///< must be > 0
};

/// Switches for the reductions layered over the exhaustive search. Turning
/// them off gives the reference search the reductions are tested against.
struct SearchOptions {
  bool count_pruning = true;      ///< vertex and neighbourhood capacity bounds
  bool edge_pruning = true;       ///< host edges vs. target edges still to realize
  bool clique_shortcut = true;    ///< clique targets: a host clique answers directly
  bool symmetry_breaking = true;  ///< interchangeable (twin) target vertices

  static SearchOptions reference() { return {false, false, false, false}; }
};

struct MinorResult {
  Answer answer = Answer::no;
  std::optional<MinorModel> witness;  ///< present iff answer == yes
  std::uint64_t expansions = 0;
};

/// Exact decision of "target is a minor of host". A yes-witness is verified
/// before it is returned.
MinorResult has_minor(const MinorQuery& q, SearchOptions options = {});

/// Same search drawing on a caller-owned budget.
MinorResult has_minor(const Graph& host, const Graph& target, Budget& budget, SearchOptions options = {});

struct HadwigerResult {
  int lower = 0;  ///< order of the witness
  int upper = 0;  ///< equals lower unless the budget ran out
  MinorModel witness;
  std::uint64_t expansions = 0;

  bool exact() const { return lower == upper; }
};

/// Largest k with a K_k minor, by testing k = clique number + 1, ... upward.
HadwigerResult hadwiger(const Graph& g, std::uint64_t budget = kDefaultBudget, SearchOptions options = {});

/// A maximum clique; among maximum cliques the one found first by a
/// least-label-first branch and bound.
Bits max_clique(const Graph& g);

}  // namespace scminor
