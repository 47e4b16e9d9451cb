#include "scminor/oracle.hpp"

#include <string>

#include "scminor/errors.hpp"
#include "scminor/generators.hpp"

namespace scminor {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::yes:
      return "yes";
    case Answer::no:
      return "no";
    case Answer::budget_exceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

namespace {

struct BudgetExhausted {};

void grow_clique(const Graph& g, Bits clique, Bits candidates, Bits& best) {
  if (candidates == 0) {
    if (popcount(clique) > popcount(best)) best = clique;
    return;
  }
  while (candidates != 0) {
    if (popcount(clique) + popcount(candidates) <= popcount(best)) return;
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    grow_clique(g, clique | bit(v), candidates & g.neighbors(v), best);
  }
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return 2 * g.size() == n * (n - 1);
}

// Builds branch sets for target vertices one at a time. The least undecided
// host vertex v is either left out of the model or becomes part of a
// connected set S, drawn from undecided vertices, that is assigned to some
// unassigned target vertex. Connected sets containing v are enumerated
// exactly once each by the usual extension/banned-set recursion.
class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& target, Budget& budget, SearchOptions options)
      : host_(host), target_(target), budget_(budget), options_(options), k_(target.order()),
        sets_(k_, 0), set_neighbors_(k_, 0), twin_rep_(k_, 0) {
    for (int x = 0; x < k_; ++x) {
      twin_rep_[x] = x;
      if (!options_.symmetry_breaking) continue;
      for (int y = 0; y < x; ++y) {
        if ((target_.neighbors(x) & ~bit(y)) == (target_.neighbors(y) & ~bit(x))) {
          twin_rep_[x] = twin_rep_[y];
          break;
        }
      }
    }
  }

  std::optional<MinorModel> run() {
    if (k_ == 0) return MinorModel{};
    if (k_ > host_.order()) return std::nullopt;
    if (options_.edge_pruning && host_.size() < target_.size()) return std::nullopt;
    if (options_.clique_shortcut && is_complete(target_)) {
      const Bits clique = max_clique(host_);
      if (popcount(clique) >= k_) {
        MinorModel m;
        Bits rest = clique;
        for (int i = 0; i < k_; ++i) {
          m.branch_sets.emplace_back(bit(lowest(rest)));
          rest &= rest - 1;
        }
        return m;
      }
    }
    if (!solve(host_.vertices())) return std::nullopt;
    MinorModel m;
    for (Bits s : sets_) m.branch_sets.emplace_back(s);
    return m;
  }

 private:
  bool solve(Bits remaining) {
    if (!budget_.spend()) throw BudgetExhausted{};
    if (assigned_ == prefix_mask(k_)) return true;
    if (remaining == 0) return false;
    if (!feasible(remaining)) return false;

    const int v = lowest(remaining);
    if (grow(bit(v), host_.neighbors(v) & ~bit(v), host_.neighbors(v) & remaining, 0, remaining)) return true;
    return solve(remaining & ~bit(v));
  }

  bool feasible(Bits remaining) const {
    const int unassigned = k_ - popcount(assigned_);
    if (options_.count_pruning) {
      if (popcount(remaining) < unassigned) return false;
      // Each unassigned target neighbour of x needs its own undecided host
      // vertex adjacent to x's branch set.
      bool ok = true;
      for_each_bit(assigned_, [&](int x) {
        const int needed = popcount(target_.neighbors(x) & ~assigned_);
        if (ok && popcount(set_neighbors_[x] & remaining) < needed) ok = false;
      });
      if (!ok) return false;
    }
    if (options_.edge_pruning) {
      const Bits open = prefix_mask(k_) & ~assigned_;
      if (host_.edges_within(remaining) < target_.edges_within(open)) return false;
    }
    return true;
  }

  // S is connected, contains the least undecided vertex, and lies in
  // `remaining`; `candidates` may extend it, `banned` may not.
  bool grow(Bits s, Bits s_neighbors, Bits candidates, Bits banned, Bits remaining) {
    if (try_assign(s, s_neighbors, remaining)) return true;
    if (options_.count_pruning) {
      const int unassigned = k_ - popcount(assigned_);
      if (popcount(remaining) - popcount(s) < unassigned) return false;
    }
    Bits pending = candidates;
    while (pending != 0) {
      const int w = lowest(pending);
      pending &= pending - 1;
      const Bits grown = s | bit(w);
      const Bits grown_neighbors = (s_neighbors | host_.neighbors(w)) & ~grown;
      const Bits next = (pending | (host_.neighbors(w) & remaining)) & ~grown & ~banned;
      if (grow(grown, grown_neighbors, next, banned, remaining)) return true;
      banned |= bit(w);
    }
    return false;
  }

  bool try_assign(Bits s, Bits s_neighbors, Bits remaining) {
    Bits tried_reps = 0;
    for (int y = 0; y < k_; ++y) {
      if ((assigned_ & bit(y)) != 0) continue;
      if ((tried_reps & bit(twin_rep_[y])) != 0) continue;
      tried_reps |= bit(twin_rep_[y]);

      bool adjacent_to_all = true;
      for_each_bit(target_.neighbors(y) & assigned_, [&](int x) {
        if ((s_neighbors & sets_[x]) == 0) adjacent_to_all = false;
      });
      if (!adjacent_to_all) continue;

      sets_[y] = s;
      set_neighbors_[y] = s_neighbors;
      assigned_ |= bit(y);
      if (solve(remaining & ~s)) return true;
      assigned_ &= ~bit(y);
      sets_[y] = 0;
      set_neighbors_[y] = 0;
    }
    return false;
  }

  const Graph& host_;
  const Graph& target_;
  Budget& budget_;
  SearchOptions options_;
  int k_;
  Bits assigned_ = 0;
  std::vector<Bits> sets_;
  std::vector<Bits> set_neighbors_;
  std::vector<int> twin_rep_;
};

}  // namespace

Bits max_clique(const Graph& g) {
  Bits best = 0;
  grow_clique(g, 0, g.vertices(), best);
  return best;
}

MinorResult has_minor(const Graph& host, const Graph& target, Budget& budget, SearchOptions options) {
  const std::uint64_t before = budget.used();
  MinorResult result;
  try {
    std::optional<MinorModel> model = MinorSearch(host, target, budget, options).run();
    if (model) {
      if (const ModelCheck check = verify_minor_model(host, *model, target); !check.ok) {
        throw TheoremViolation("minor search produced an invalid witness: " + check.reason);
      }
      result.answer = Answer::yes;
      result.witness = std::move(model);
    } else {
      result.answer = Answer::no;
    }
  } catch (const BudgetExhausted&) {
    result.answer = Answer::budget_exceeded;
  }
  result.expansions = budget.used() - before;
  return result;
}

MinorResult has_minor(const MinorQuery& q, SearchOptions options) {
  if (q.budget == 0) throw DomainError("minor query budget must be positive");
  Budget budget(q.budget);
  return has_minor(q.host, q.target, budget, options);
}

HadwigerResult hadwiger(const Graph& g, std::uint64_t budget_limit, SearchOptions options) {
  if (budget_limit == 0) throw DomainError("budget must be positive");
  Budget budget(budget_limit);
  HadwigerResult result;

  const int n = g.order();
  const int m = g.size();
  int ceiling = 0;
  while (ceiling + 1 <= n && ceiling * (ceiling + 1) / 2 <= m) ++ceiling;

  if (n > 0) {
    const Bits clique = options.clique_shortcut ? max_clique(g) : bit(0);
    for_each_bit(clique, [&](int v) { result.witness.branch_sets.emplace_back(bit(v)); });
    result.lower = popcount(clique);
  }
  result.upper = ceiling;

  for (int k = result.lower + 1; k <= ceiling; ++k) {
    MinorResult r = has_minor(g, complete_graph(k), budget, options);
    if (r.answer == Answer::yes) {
      result.lower = k;
      result.witness = std::move(*r.witness);
      continue;
    }
    if (r.answer == Answer::no) result.upper = k - 1;
    break;
  }
  result.expansions = budget.used();
  return result;
}

}  // namespace scminor
