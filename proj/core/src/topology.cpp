#include "scminor/topology.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "scminor/construction.hpp"
#include "scminor/errors.hpp"
#include "scminor/generators.hpp"

namespace scminor {

bool planar(const Graph& g) {
  const int n = g.order();
  const int m = g.size();
  if (n >= 3 && m > 3 * n - 6) return false;
  if (n <= 4) return true;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool outerplanar(const Graph& g) {
  const int n = g.order();
  if (n >= 2 && g.size() > 2 * n - 3) return false;
  if (n >= kMaxVertices) throw CapacityError("outerplanarity test needs n < 64");
  return planar(join(g, Graph(1)));
}

namespace {

PropertyResult find_obstruction(const Graph& g, const std::vector<std::pair<std::string, Graph>>& obstructions,
                                std::uint64_t budget_limit) {
  PropertyResult out;
  Budget budget(budget_limit);
  for (const auto& [name, target] : obstructions) {
    MinorResult r = has_minor(g, target, budget);
    if (r.answer == Answer::yes) {
      out.obstruction = name;
      out.witness = std::move(r.witness);
      return out;
    }
    if (r.answer == Answer::budget_exceeded) {
      out.witness_indeterminate = true;
      return out;
    }
  }
  throw TheoremViolation("graph fails the embedding test but contains neither excluded minor");
}

}  // namespace

PropertyResult is_planar(const Graph& g, WitnessOptions options) {
  if (planar(g)) return {true, {}, std::nullopt, false};
  if (!options.want_witness) return {};
  return find_obstruction(g, {{"K5", complete_graph(5)}, {"K3,3", complete_bipartite(3, 3)}}, options.budget);
}

PropertyResult is_outerplanar(const Graph& g, WitnessOptions options) {
  if (outerplanar(g)) return {true, {}, std::nullopt, false};
  if (!options.want_witness) return {};
  return find_obstruction(g, {{"K4", complete_graph(4)}, {"K2,3", complete_bipartite(2, 3)}}, options.budget);
}

std::string_view to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::found:
      return "found";
    case CertificateStatus::not_found:
      return "not_found";
    case CertificateStatus::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

Certificate clique_certificate(const Graph& g, int k, std::uint64_t budget) {
  if (guaranteed_clique_order(g.order()) >= k) {
    if (std::optional<MinorModel> model = theorem_minor(g)) {
      model->branch_sets.resize(static_cast<std::size_t>(k));
      return {CertificateStatus::found, std::move(model), "construction"};
    }
  }
  MinorResult r = has_minor(MinorQuery{g, complete_graph(k), budget});
  switch (r.answer) {
    case Answer::yes:
      return {CertificateStatus::found, std::move(r.witness), "oracle"};
    case Answer::no:
      return {CertificateStatus::not_found, std::nullopt, "oracle"};
    case Answer::budget_exceeded:
      break;
  }
  return {CertificateStatus::indeterminate, std::nullopt, "oracle"};
}

Certificate il_certificate(const Graph& g, std::uint64_t budget) { return clique_certificate(g, 6, budget); }

Certificate ik_certificate(const Graph& g, std::uint64_t budget) { return clique_certificate(g, 7, budget); }

namespace {

// Size-r subsets of 0..n-1 in lexicographic order; stops when fn returns true.
bool subsets_of_size(int n, int r, Bits chosen, int start, const auto& fn) {
  if (r == 0) return fn(chosen);
  for (int v = start; v <= n - r; ++v) {
    if (subsets_of_size(n, r - 1, chosen | bit(v), v + 1, fn)) return true;
  }
  return false;
}

}  // namespace

ApexResult is_apex(const Graph& g, int j) {
  if (j < 0) throw DomainError("apex number must be non-negative");
  const int n = g.order();
  for (int r = 0; r <= std::min(j, n); ++r) {
    std::optional<VertexSet> found;
    subsets_of_size(n, r, 0, 0, [&](Bits deleted) {
      if (!planar(induced_subgraph(g, VertexSet(g.vertices() & ~deleted)).graph)) return false;
      found = VertexSet(deleted);
      return true;
    });
    if (found) return {true, found};
  }
  return {false, std::nullopt};
}

bool TopologyReport::not_il_by_apex() const {
  const auto it = apex.find(1);
  return it != apex.end() && it->second.holds;
}

bool TopologyReport::not_ik_by_apex() const {
  const auto it = apex.find(2);
  return (it != apex.end() && it->second.holds) || not_il_by_apex();
}

bool TopologyReport::indeterminate() const {
  return il.status == CertificateStatus::indeterminate || ik.status == CertificateStatus::indeterminate;
}

TopologyReport report(const Graph& g, int max_apex, std::uint64_t budget) {
  TopologyReport r;
  r.planar = planar(g);
  r.outerplanar = r.planar && outerplanar(g);
  r.ik = ik_certificate(g, budget);
  if (r.ik.status == CertificateStatus::found) {
    r.il = {CertificateStatus::found, r.ik.model, r.ik.source};
    r.il.model->branch_sets.resize(6);
  } else {
    r.il = il_certificate(g, budget);
  }
  for (int j = 0; j <= max_apex; ++j) r.apex[j] = is_apex(g, j);
  return r;
}

}  // namespace scminor
