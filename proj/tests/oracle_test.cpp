#include <gtest/gtest.h>

#include <set>
#include <string>

#include "scminor/canonical.hpp"
#include "scminor/errors.hpp"
#include "scminor/generators.hpp"
#include "scminor/graph6.hpp"
#include "scminor/oracle.hpp"
#include "test_oracles.hpp"

namespace scminor {
namespace {

Answer answer(const Graph& host, const Graph& target, SearchOptions opts = {}) {
  return has_minor(MinorQuery{host, target}, opts).answer;
}

std::vector<Graph> classes_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::string> seen;
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      if (seen.insert(canonical_form(g)).second) out.push_back(g);
    });
  }
  return out;
}

TEST(HasMinorTest, Examples) {
  EXPECT_EQ(answer(path_graph(4), complete_graph(3)), Answer::no);
  EXPECT_EQ(answer(cycle_graph(5), complete_graph(3)), Answer::yes);
  EXPECT_EQ(answer(sharp_4n(2), complete_graph(5)), Answer::no);
  EXPECT_EQ(answer(Graph(1), complete_graph(1)), Answer::yes);
  EXPECT_EQ(answer(complete_graph(3), complete_graph(4)), Answer::no);
  EXPECT_EQ(answer(complete_bipartite(3, 3), complete_graph(4)), Answer::yes);
  EXPECT_EQ(answer(complete_bipartite(3, 3), complete_graph(5)), Answer::no);
  EXPECT_EQ(answer(cycle_graph(6), complete_bipartite(2, 3)), Answer::no);
  EXPECT_EQ(answer(complete_graph(5), complete_bipartite(2, 3)), Answer::yes);
}

TEST(HasMinorTest, WitnessIsVerified) {
  const MinorResult r = has_minor(MinorQuery{cycle_graph(5), complete_graph(3)});
  ASSERT_EQ(r.answer, Answer::yes);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_minor_model(cycle_graph(5), *r.witness, complete_graph(3)).ok);
  EXPECT_FALSE(has_minor(MinorQuery{path_graph(4), complete_graph(3)}).witness);
}

TEST(HasMinorTest, BudgetHandling) {
  EXPECT_THROW(has_minor(MinorQuery{path_graph(4), complete_graph(3), 0}), DomainError);
  // With every shortcut off the search needs more than one expansion here.
  const MinorResult r = has_minor(MinorQuery{sharp_4n(2), complete_graph(5), 1}, SearchOptions::reference());
  EXPECT_EQ(r.answer, Answer::budget_exceeded);
  EXPECT_FALSE(r.witness);

  Budget shared(1'000'000);
  EXPECT_EQ(has_minor(cycle_graph(5), complete_graph(3), shared).answer, Answer::yes);
  const std::uint64_t after_first = shared.used();
  EXPECT_GT(after_first, 0U);
  EXPECT_EQ(has_minor(sharp_4n(2), complete_graph(5), shared).answer, Answer::no);
  EXPECT_GE(shared.used(), after_first);
}

TEST(HadwigerTest, Examples) {
  EXPECT_EQ(hadwiger(Graph(1)).lower, 1);
  EXPECT_EQ(hadwiger(path_graph(4)).lower, 2);
  EXPECT_EQ(hadwiger(cycle_graph(5)).lower, 3);
  EXPECT_EQ(hadwiger(complete_graph(6)).lower, 6);
  EXPECT_EQ(hadwiger(complete_bipartite(3, 3)).lower, 4);
  EXPECT_EQ(hadwiger(empty_graph(5)).lower, 1);
}

TEST(HadwigerTest, SharpFamilies) {
  for (int n = 1; n <= 2; ++n) {
    const HadwigerResult a = hadwiger(sharp_4n(n));
    EXPECT_TRUE(a.exact());
    EXPECT_EQ(a.lower, 2 * n) << "sharp_4n(" << n << ")";
    const HadwigerResult b = hadwiger(sharp_4n_plus_1(n));
    EXPECT_TRUE(b.exact());
    EXPECT_EQ(b.lower, 2 * n + 1) << "sharp_4n_plus_1(" << n << ")";
  }
}

TEST(HadwigerTest, WitnessMatchesValue) {
  for (const Graph& g : enumerate_sc(8)) {
    const HadwigerResult h = hadwiger(g);
    ASSERT_TRUE(h.exact());
    EXPECT_EQ(h.witness.order(), h.lower);
    EXPECT_TRUE(verify_minor_model(g, h.witness, complete_graph(h.lower)).ok) << write_graph6(g);
  }
}

TEST(HadwigerTest, BudgetExhaustionGivesBounds) {
  const HadwigerResult h = hadwiger(sharp_4n(2), 1, SearchOptions::reference());
  EXPECT_FALSE(h.exact());
  EXPECT_LT(h.lower, h.upper);
  EXPECT_TRUE(verify_minor_model(sharp_4n(2), h.witness, complete_graph(h.lower)).ok);
}

TEST(MaxCliqueTest, Examples) {
  EXPECT_EQ(popcount(max_clique(complete_graph(5))), 5);
  EXPECT_EQ(popcount(max_clique(cycle_graph(5))), 2);
  EXPECT_EQ(popcount(max_clique(sharp_4n(2))), 4);
  EXPECT_EQ(popcount(max_clique(empty_graph(3))), 1);
  EXPECT_EQ(max_clique(Graph(0)), 0U);
}

// Exhaustive agreement with the partition-enumerating reference.
TEST(OraclePropertyTest, HadwigerMatchesReferenceOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    testing::for_each_labeled_graph(n, [&](const Graph& g) {
      const HadwigerResult h = hadwiger(g);
      ASSERT_TRUE(h.exact());
      ASSERT_EQ(h.lower, testing::reference_hadwiger(g)) << write_graph6(g);
    });
  }
}

TEST(OraclePropertyTest, PruningDoesNotChangeAnswers) {
  const std::vector<Graph> targets{complete_graph(3), complete_graph(4), complete_graph(5),
                                   complete_bipartite(2, 3), complete_bipartite(3, 3), cycle_graph(4)};
  for (const Graph& g : classes_up_to(7)) {
    for (const Graph& t : targets) {
      const MinorResult fast = has_minor(MinorQuery{g, t});
      const MinorResult slow = has_minor(MinorQuery{g, t}, SearchOptions::reference());
      ASSERT_NE(slow.answer, Answer::budget_exceeded);
      ASSERT_EQ(fast.answer, slow.answer) << write_graph6(g) << " target " << write_graph6(t);
      if (fast.answer == Answer::yes) {
        ASSERT_TRUE(verify_minor_model(g, *fast.witness, t).ok);
        ASSERT_TRUE(verify_minor_model(g, *slow.witness, t).ok);
      }
    }
  }
}

TEST(OraclePropertyTest, MonotoneUnderInducedSubgraphs) {
  for (const Graph& g : enumerate_sc(9)) {
    const int whole = hadwiger(g).lower;
    for (int v = 0; v < g.order(); ++v) {
      const Graph sub = induced_subgraph(g, VertexSet(g.vertices() & ~bit(v))).graph;
      const int part = hadwiger(sub).lower;
      EXPECT_LE(part, whole);
      EXPECT_GE(part, whole - 1);
    }
  }
}

}  // namespace
}  // namespace scminor
