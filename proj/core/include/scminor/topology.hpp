#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "scminor/graph.hpp"
#include "scminor/minor_model.hpp"
#include "scminor/oracle.hpp"

namespace scminor {

/// Plane-embeddability test (Boyer-Myrvold).
bool planar(const Graph& g);

/// Outerplanarity via planarity of g joined with one extra vertex.
bool outerplanar(const Graph& g);

struct WitnessOptions {
  bool want_witness = true;
  std::uint64_t budget = kDefaultBudget;
};

struct PropertyResult {
  bool holds = false;
  /// When the property fails and a witness was requested: the excluded minor
  /// found ("K5", "K3,3", "K4", "K2,3") and its model in g.
  std::string obstruction;
  std::optional<MinorModel> witness;
  /// Set when a witness was requested but the oracle ran out of budget.
  bool witness_indeterminate = false;
};

PropertyResult is_planar(const Graph& g, WitnessOptions options = {});
PropertyResult is_outerplanar(const Graph& g, WitnessOptions options = {});

enum class CertificateStatus {
  found,          ///< a verified K_k model is attached
  not_found,      ///< the oracle proved there is no K_k minor; says nothing about IL/IK
  indeterminate,  ///< oracle budget exhausted
};

std::string_view to_string(CertificateStatus s);

struct Certificate {
  CertificateStatus status = CertificateStatus::not_found;
  std::optional<MinorModel> model;
  std::string source;  ///< "construction" or "oracle"
};

/// K_k model of g: for self-complementary g with floor((n+1)/2) >= k the
/// construction is used, otherwise the oracle.
Certificate clique_certificate(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

/// K6 minor: sufficient for intrinsic linking.
Certificate il_certificate(const Graph& g, std::uint64_t budget = kDefaultBudget);
/// K7 minor: sufficient for intrinsic knotting.
Certificate ik_certificate(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct ApexResult {
  bool holds = false;
  /// Deleted set of least size, then lexicographically least.
  std::optional<VertexSet> deleted;
};

/// Whether deleting at most j vertices leaves a planar graph.
ApexResult is_apex(const Graph& g, int j);

struct TopologyReport {
  bool outerplanar = false;
  bool planar = false;
  Certificate il;
  Certificate ik;
  std::map<int, ApexResult> apex;  ///< j -> result for j = 0..max_apex

  /// 1-apex graphs are linklessly embeddable, 2-apex graphs are not IK.
  bool not_il_by_apex() const;
  bool not_ik_by_apex() const;
  bool indeterminate() const;
};

TopologyReport report(const Graph& g, int max_apex, std::uint64_t budget = kDefaultBudget);

}  // namespace scminor
