#include <gtest/gtest.h>

#include <set>
#include <string>

#include "scminor/canonical.hpp"
#include "scminor/construction.hpp"
#include "scminor/errors.hpp"
#include "scminor/generators.hpp"
#include "scminor/graph6.hpp"
#include "scminor/oracle.hpp"
#include "scminor/topology.hpp"
#include "test_oracles.hpp"

namespace scminor {
namespace {

std::vector<Graph> classes_of_order(int n) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  testing::for_each_labeled_graph(n, [&](const Graph& g) {
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  });
  return out;
}

TEST(PlanarityTest, Examples) {
  EXPECT_TRUE(planar(complete_graph(4)));
  EXPECT_FALSE(planar(complete_graph(5)));
  EXPECT_FALSE(planar(complete_bipartite(3, 3)));
  EXPECT_TRUE(planar(cycle_graph(7)));
  EXPECT_TRUE(planar(Graph(0)));

  const PropertyResult k5 = is_planar(complete_graph(5));
  EXPECT_FALSE(k5.holds);
  EXPECT_EQ(k5.obstruction, "K5");
  ASSERT_TRUE(k5.witness);
  EXPECT_TRUE(verify_minor_model(complete_graph(5), *k5.witness, complete_graph(5)).ok);

  const PropertyResult k33 = is_planar(complete_bipartite(3, 3));
  EXPECT_EQ(k33.obstruction, "K3,3");
  EXPECT_TRUE(verify_minor_model(complete_bipartite(3, 3), *k33.witness, complete_bipartite(3, 3)).ok);

  EXPECT_FALSE(is_planar(complete_graph(5), {.want_witness = false}).witness);
}

TEST(OuterplanarityTest, Examples) {
  EXPECT_TRUE(outerplanar(cycle_graph(5)));
  EXPECT_TRUE(outerplanar(path_graph(4)));
  EXPECT_FALSE(outerplanar(complete_bipartite(2, 3)));

  const PropertyResult k4 = is_outerplanar(complete_graph(4));
  EXPECT_FALSE(k4.holds);
  EXPECT_EQ(k4.obstruction, "K4");
  ASSERT_TRUE(k4.witness);
  EXPECT_TRUE(verify_minor_model(complete_graph(4), *k4.witness, complete_graph(4)).ok);

  const PropertyResult k23 = is_outerplanar(complete_bipartite(2, 3));
  EXPECT_EQ(k23.obstruction, "K2,3");
}

TEST(OuterplanarityTest, SmallSelfComplementaryGraphs) {
  for (int n : {1, 4, 5}) {
    for (const Graph& g : enumerate_sc(n)) EXPECT_TRUE(outerplanar(g)) << write_graph6(g);
  }
  for (const Graph& g : enumerate_sc(8)) EXPECT_FALSE(outerplanar(g)) << write_graph6(g);
  for (const Graph& g : enumerate_sc(9)) EXPECT_FALSE(outerplanar(g)) << write_graph6(g);
}

TEST(PlanarityTest, SelfComplementaryOrdersEightAndNine) {
  int planar_count = 0;
  for (const Graph& g : enumerate_sc(8)) planar_count += planar(g) ? 1 : 0;
  EXPECT_GE(planar_count, 1);
  for (const Graph& g : enumerate_sc(9)) {
    const PropertyResult r = is_planar(g);
    EXPECT_FALSE(r.holds) << write_graph6(g);
    ASSERT_TRUE(r.witness);
  }
}

// The embedding tests agree with Kuratowski/Wagner-type minor checks.
TEST(TopologyPropertyTest, EmbeddingTestsMatchExcludedMinors) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : classes_of_order(n)) {
      const bool no_planar_obstruction = has_minor(MinorQuery{g, complete_graph(5)}).answer == Answer::no &&
                                         has_minor(MinorQuery{g, complete_bipartite(3, 3)}).answer == Answer::no;
      ASSERT_EQ(planar(g), no_planar_obstruction) << write_graph6(g);
      const bool no_outer_obstruction = has_minor(MinorQuery{g, complete_graph(4)}).answer == Answer::no &&
                                        has_minor(MinorQuery{g, complete_bipartite(2, 3)}).answer == Answer::no;
      ASSERT_EQ(outerplanar(g), no_outer_obstruction) << write_graph6(g);
    }
  }
}

TEST(TopologyPropertyTest, EdgeBounds) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : classes_of_order(n)) {
      if (planar(g)) ASSERT_LE(g.size(), 3 * n - 6);
      if (outerplanar(g)) ASSERT_LE(g.size(), 2 * n - 3);
    }
  }
}

TEST(CertificateTest, Examples) {
  const Certificate p4 = clique_certificate(path_graph(4), 3);
  EXPECT_EQ(p4.status, CertificateStatus::not_found);
  EXPECT_FALSE(p4.model);

  const Certificate c5 = clique_certificate(cycle_graph(5), 3);
  EXPECT_EQ(c5.status, CertificateStatus::found);
  EXPECT_EQ(c5.source, "construction");

  const Certificate k6 = il_certificate(complete_graph(6));
  EXPECT_EQ(k6.status, CertificateStatus::found);
  EXPECT_EQ(k6.source, "oracle");
  EXPECT_EQ(ik_certificate(complete_graph(6)).status, CertificateStatus::not_found);

  EXPECT_EQ(to_string(CertificateStatus::indeterminate), "indeterminate");
}

TEST(CertificateTest, RandomOrdersTwelveAndThirteen) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g12 = random_sc(12, seed).graph;
    const Certificate il = il_certificate(g12);
    ASSERT_EQ(il.status, CertificateStatus::found);
    EXPECT_EQ(il.source, "construction");
    EXPECT_TRUE(verify_minor_model(g12, *il.model, complete_graph(6)).ok);

    const Graph g13 = random_sc(13, seed).graph;
    const Certificate ik = ik_certificate(g13);
    ASSERT_EQ(ik.status, CertificateStatus::found);
    EXPECT_TRUE(verify_minor_model(g13, *ik.model, complete_graph(7)).ok);
  }
}

TEST(ApexTest, Examples) {
  EXPECT_TRUE(is_apex(complete_graph(5), 1).holds);
  EXPECT_FALSE(is_apex(complete_graph(7), 1).holds);
  EXPECT_TRUE(is_apex(complete_graph(7), 3).holds);

  const ApexResult k5 = is_apex(complete_graph(5), 1);
  ASSERT_TRUE(k5.deleted);
  EXPECT_EQ(*k5.deleted, (VertexSet{0}));

  const ApexResult zero = is_apex(path_graph(4), 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(*zero.deleted, VertexSet{});
  EXPECT_THROW(is_apex(path_graph(4), -1), DomainError);
}

TEST(ApexTest, ZeroApexIsPlanarity) {
  for (const Graph& g : enumerate_sc(8)) EXPECT_EQ(is_apex(g, 0).holds, planar(g));
  for (const Graph& g : enumerate_sc(9)) EXPECT_EQ(is_apex(g, 0).holds, planar(g));
}

TEST(ApexTest, DeletedSetLeavesPlanarGraph) {
  for (const Graph& g : enumerate_sc(9)) {
    const ApexResult r = is_apex(g, 1);
    if (!r.holds) continue;
    EXPECT_EQ(r.deleted->size(), 1);
    EXPECT_TRUE(planar(induced_subgraph(g, VertexSet(g.vertices() & ~r.deleted->bits())).graph));
  }
}

TEST(ApexTest, SomeTwelveVertexGraphIsTwoApex) {
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    const Graph g = random_sc(12, seed).graph;
    const ApexResult r = is_apex(g, 2);
    if (!r.holds) continue;
    found = true;
    EXPECT_TRUE(planar(induced_subgraph(g, VertexSet(g.vertices() & ~r.deleted->bits())).graph));
    const TopologyReport rep = report(g, 2);
    EXPECT_EQ(rep.il.status, CertificateStatus::found);
    // A 1-apex graph is not intrinsically linked, so a K6 minor rules it out.
    EXPECT_FALSE(rep.apex.at(1).holds);
    EXPECT_TRUE(rep.not_ik_by_apex());
  }
  EXPECT_TRUE(found);
}

TEST(ReportTest, Consistency) {
  for (const Graph& g : enumerate_sc(9)) {
    const TopologyReport r = report(g, 2);
    EXPECT_EQ(r.planar, planar(g));
    EXPECT_EQ(r.outerplanar, outerplanar(g));
    EXPECT_EQ(r.apex.size(), 3U);
    EXPECT_EQ(r.apex.at(0).holds, r.planar);
    EXPECT_FALSE(r.indeterminate());
    if (r.ik.status == CertificateStatus::found) EXPECT_EQ(r.il.status, CertificateStatus::found);
    if (r.il.model) EXPECT_TRUE(verify_minor_model(g, *r.il.model, complete_graph(6)).ok);
    if (r.ik.model) EXPECT_TRUE(verify_minor_model(g, *r.ik.model, complete_graph(7)).ok);
  }
}

TEST(ReportTest, Order13GraphsAreIntrinsicallyKnotted) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = random_sc(13, seed).graph;
    const TopologyReport r = report(g, 1);
    EXPECT_EQ(r.ik.status, CertificateStatus::found);
    EXPECT_EQ(r.il.status, CertificateStatus::found);
    EXPECT_EQ(r.il.model->order(), 6);
    EXPECT_FALSE(r.planar);
  }
}

}  // namespace
}  // namespace scminor
