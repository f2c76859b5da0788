#include <random>

#include <gtest/gtest.h>

#include "lowcond/separators.hpp"
#include "lowcond/subsets.hpp"
#include "lowcond/verify.hpp"
#include "support.hpp"

namespace lowcond {
namespace {

using testing::kite;
using testing::labels_to_set;

class Kite : public ::testing::Test {
 protected:
  UndirectedGraph g = kite();
  Vertex v(const char* label) const { return g.index_of(label); }
  VertexSet set(std::initializer_list<const char*> labels) const { return labels_to_set(g, labels); }
};

TEST_F(Kite, IsSeparator) {
  EXPECT_TRUE(is_separator(g, v("1"), v("3"), set({"2"})));
  EXPECT_FALSE(is_separator(g, v("2"), v("5"), set({"3"})));
  EXPECT_THROW(is_separator(g, v("1"), v("2"), {}), DomainError);
  EXPECT_THROW(is_separator(g, v("1"), v("3"), set({"1"})), DomainError);
}

TEST(IsSeparator, DisconnectedPairWithEmptySet) {
  EXPECT_TRUE(is_separator(UndirectedGraph(2), 0, 1, {}));
}

TEST_F(Kite, IsMinimalSeparator) {
  EXPECT_TRUE(is_minimal_separator(g, v("1"), v("5"), set({"3", "4"})));
  EXPECT_TRUE(is_minimal_separator(g, v("1"), v("5"), set({"2"})));
  EXPECT_FALSE(is_minimal_separator(g, v("1"), v("5"), set({"2", "3"})));
  EXPECT_FALSE(is_minimal_separator(g, v("1"), v("5"), set({"3"})));
}

TEST(IsMinimalSeparator, ExtraIsolatedVertexBreaksMinimality) {
  // path 1-2-3 plus isolated 4
  const auto g = UndirectedGraph(4, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_minimal_separator(g, 0, 2, VertexSet{1}));
  EXPECT_FALSE(is_minimal_separator(g, 0, 2, VertexSet{1, 3}));
}

TEST_F(Kite, MinimalSeparatorListsAsPrinted) {
  using Sets = std::vector<VertexSet>;
  EXPECT_EQ(minimal_separators(g, v("1"), v("3")), (Sets{set({"2"})}));
  EXPECT_EQ(minimal_separators(g, v("1"), v("4")), (Sets{set({"2"})}));
  EXPECT_EQ(minimal_separators(g, v("2"), v("5")), (Sets{set({"3", "4"})}));
  EXPECT_EQ(minimal_separators(g, v("1"), v("5")), (Sets{set({"2"}), set({"3", "4"})}));
}

TEST(MinimalSeparators, EmptyAcrossComponentsAndCapped) {
  EXPECT_TRUE(minimal_separators(UndirectedGraph(2), 0, 1).empty());
  EXPECT_THROW(minimal_separators(UndirectedGraph(17), 0, 1), DomainError);
  EXPECT_NO_THROW(minimal_separators(UndirectedGraph(17), 0, 1, 20));
  EXPECT_THROW(minimal_separators(UndirectedGraph(3, {{0, 1}}), 0, 1), DomainError);
}

// ms_G(a, b) is empty iff a and b lie in different components.
TEST(MinimalSeparators, EmptyIffDifferentComponents) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = testing::random_test_graph(6, 0.25, rng);
    const auto blocks = connected_components(g);
    for (Vertex a = 0; a < 6; ++a) {
      for (Vertex b = a + 1; b < 6; ++b) {
        if (g.adjacent(a, b)) continue;
        const bool same = std::any_of(blocks.begin(), blocks.end(),
                                      [&](const VertexSet& c) { return c.contains(a) && c.contains(b); });
        EXPECT_EQ(minimal_separators(g, a, b).empty(), !same);
      }
    }
  }
}

TEST_F(Kite, MinSeparatorSize) {
  EXPECT_EQ(min_separator_size(g, v("1"), v("3")), 1u);
  EXPECT_EQ(min_separator_size(g, v("2"), v("5")), 2u);
  EXPECT_EQ(min_vertex_cut(g, v("2"), v("5")), set({"3", "4"}));
  EXPECT_THROW(min_separator_size(g, v("3"), v("4")), DomainError);
}

TEST(MinSeparatorSize, ZeroAcrossComponents) {
  EXPECT_EQ(min_separator_size(UndirectedGraph(4, {{0, 1}, {2, 3}}), 0, 2), 0u);
}

// Max-flow route vs the smallest separator found by literal path enumeration
// over all subsets, exhaustively on every graph with up to 5 vertices.
TEST(MinSeparatorSize, MatchesPathEnumerationExhaustively) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          if (g.adjacent(a, b)) continue;
          std::size_t best = n;
          for (const auto& s : testing::power_set(others(n, a, b))) {
            if (s.size() < best && testing::path_enumeration_separates(g, VertexSet{a}, VertexSet{b}, s)) {
              best = s.size();
            }
          }
          ASSERT_EQ(min_separator_size(g, a, b), best) << serialize_graph(g);
          const auto cut = min_vertex_cut(g, a, b);
          EXPECT_TRUE(testing::path_enumeration_separates(g, VertexSet{a}, VertexSet{b}, cut));
        }
      }
    }
  }
}

TEST(MinSeparatorSize, MatchesBruteForceOnRandomEightVertexGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_test_graph(8, 0.15 + 0.7 * (trial % 10) / 10.0, rng);
    for (Vertex a = 0; a < 8; ++a) {
      for (Vertex b = a + 1; b < 8; ++b) {
        if (!g.adjacent(a, b)) {
          ASSERT_EQ(min_separator_size(g, a, b), brute_force_min_separator_size(g, a, b));
        }
      }
    }
  }
}

TEST_F(Kite, MinimalSeparatorNear) {
  EXPECT_EQ(minimal_separator_near(g, v("1"), v("5")), set({"2"}));
  EXPECT_EQ(minimal_separator_near(g, v("5"), v("1")), set({"3", "4"}));
}

TEST(MinimalSeparatorNear, StarAndPath) {
  const auto s = testing::star();
  EXPECT_EQ(minimal_separator_near(s, s.index_of("x"), s.index_of("y")), VertexSet{s.index_of("c")});
  EXPECT_EQ(minimal_separator_near(testing::path(4), 0, 3), VertexSet{1});
  EXPECT_THROW(minimal_separator_near(UndirectedGraph(3, {{0, 1}}), 0, 2), DomainError);
}

// The counterexample graph for the literal "adjacent and on a path" set:
// a-x, a-y, x-y, x-b. The near separator is {x}, not {x, y}.
TEST(MinimalSeparatorNear, PicksMinimalSetWhereOnPathSetIsNot) {
  const auto g = parse_graph("vertices: a x y b\na x\na y\nx y\nx b\n");
  const auto near = minimal_separator_near(g, g.index_of("a"), g.index_of("b"));
  EXPECT_EQ(near, VertexSet{g.index_of("x")});
  EXPECT_FALSE(is_minimal_separator(g, g.index_of("a"), g.index_of("b"), VertexSet{1, 2}));
}

TEST(MinimalSeparatorNear, MinimalInsideNeighbourhoodWithDegreeTwoMembers) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_test_graph(7, 0.3, rng);
    const std::vector<char> none(7, 0);
    for (Vertex a = 0; a < 7; ++a) {
      for (Vertex b = 0; b < 7; ++b) {
        if (a == b || g.adjacent(a, b) || !detail::reachable(g, VertexSet{a}, none)[b]) continue;
        const auto near = minimal_separator_near(g, a, b);
        EXPECT_TRUE(testing::definitional_minimal(g, a, b, near));
        EXPECT_TRUE(near.is_subset_of(neighbors(g, a)));
        for (Vertex w : near) EXPECT_GE(g.degree(w), 2u);
      }
    }
  }
}

// Component characterisation vs "no proper subset separates", every S, |V| <= 7.
TEST(IsMinimalSeparatorProperty, AgreesWithSubsetDefinition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto g = testing::random_test_graph(n, 0.45, rng);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (g.adjacent(a, b)) continue;
        for (const auto& s : testing::power_set(others(n, a, b))) {
          ASSERT_EQ(is_minimal_separator(g, a, b, s), testing::definitional_minimal(g, a, b, s))
              << serialize_graph(g);
        }
      }
    }
  }
}

TEST(SeparabilityOrder, Examples) {
  EXPECT_EQ(separability_order(kite()), 2u);
  EXPECT_TRUE(separability_order(UndirectedGraph::complete(5)).is_infinite());
  EXPECT_EQ(separability_order(UndirectedGraph(4)), 0u);
  EXPECT_EQ(separability_order(testing::star()), 1u);
}

TEST(SeparabilityOrder, InfinityComparesAboveEveryNatural) {
  const auto inf = SeparabilityOrder::infinite();
  EXPECT_TRUE(SeparabilityOrder(1000000) < inf);
  EXPECT_TRUE(inf > std::size_t{7});
  EXPECT_FALSE(inf == std::size_t{0});
  EXPECT_EQ(inf, SeparabilityOrder::infinite());
  EXPECT_THROW(inf.value(), DomainError);
  EXPECT_EQ(inf.to_string(), "infinite");
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(kite()), 3u);
  EXPECT_EQ(degree(UndirectedGraph::complete(6)), 5u);
  EXPECT_EQ(degree(UndirectedGraph(3)), 0u);
  EXPECT_THROW(degree(UndirectedGraph()), DomainError);
  EXPECT_EQ(degree_of(kite(), 0), 1u);
}

TEST(DegreeTwo, Examples) {
  const auto s = testing::star();
  EXPECT_EQ(degree_two(s), 1u);
  EXPECT_EQ(degree(s), 3u);
  EXPECT_EQ(separability_order(s), 1u);

  EXPECT_EQ(degree_two(UndirectedGraph::complete(3)), 2u);
  EXPECT_EQ(degree_two(UndirectedGraph::complete(6)), 5u);

  const auto g = kite();
  EXPECT_EQ(degree_two_of(g, g.index_of("2")), 2u);
  EXPECT_EQ(degree_two_of(g, g.index_of("3")), 3u);
  EXPECT_EQ(degree_two(g), 3u);
  EXPECT_THROW(degree_two(UndirectedGraph()), DomainError);
}

TEST_F(Kite, SeparabilityReport) {
  const auto r = analyze_separability(g);
  EXPECT_EQ(r.so, 2u);
  EXPECT_EQ(r.d, 3u);
  EXPECT_EQ(r.d2, 3u);
  ASSERT_EQ(r.pair_orders.size(), 4u);
  std::vector<std::size_t> orders;
  for (const auto& p : r.pair_orders) orders.push_back(p.order);
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 1, 1, 2}));  // (1,3) (1,4) (1,5) (2,5)
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->a, v("2"));
  EXPECT_EQ(r.witness->b, v("5"));
  EXPECT_EQ(r.witness->separator, set({"3", "4"}));
}

TEST(SeparabilityReport, CompleteGraphHasNoWitness) {
  const auto r = analyze_separability(UndirectedGraph::complete(4));
  EXPECT_TRUE(r.so.is_infinite());
  EXPECT_FALSE(r.witness);
  EXPECT_TRUE(r.pair_orders.empty());
}

// Separator invariants (so <= d, so <= d2, component decomposition, ...)
// over every graph on up to 5 vertices and random 7-vertex graphs.
TEST(SeparatorInvariants, PropertySuitesHold) {
  VerifyOptions options;
  options.vertices = 7;
  options.exhaustive_max = 5;
  options.trials = 60;
  options.seed = 12;
  const auto report = run_verification(options);
  for (const auto& p : report.properties) {
    EXPECT_GT(p.checked, 0u) << p.name;
    EXPECT_EQ(p.violations, 0u) << p.name << "\n" << p.counterexample.value_or("");
  }
}

// Adding edges never lowers d2.
TEST(SeparatorInvariants, DegreeTwoMonotoneUnderRandomEdgeAdditions) {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<Vertex> pick(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_test_graph(9, 0.2, rng);
    for (int step = 0; step < 10; ++step) {
      const Vertex a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const auto bigger = g.with_edge(a, b);
      EXPECT_LE(degree_two(g), degree_two(bigger));
      g = bigger;
    }
  }
}

}  // namespace
}  // namespace lowcond
