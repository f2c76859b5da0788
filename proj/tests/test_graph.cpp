#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "lowcond/edge_list.hpp"
#include "lowcond/graph.hpp"
#include "lowcond/subsets.hpp"
#include "support.hpp"

namespace lowcond {
namespace {

using testing::kite;
using testing::labels_to_set;

TEST(ParseGraph, KiteFixtureHasFiveVerticesSixEdges) {
  const auto g = kite();
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.adjacent(g.index_of("3"), g.index_of("5")));
  EXPECT_FALSE(g.adjacent(g.index_of("2"), g.index_of("5")));
}

TEST(ParseGraph, SingleDeclaredVertex) {
  const auto g = parse_graph("vertices: a\n");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.label(0), "a");
}

TEST(ParseGraph, ReversedDuplicateCollapses) {
  const auto g = parse_graph("vertices: 1 2\n1 2\n2 1");
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseGraph, UndeclaredLabelsAddedInOrder) {
  const auto g = parse_graph("# comment\n\nx y\ny z\n");
  ASSERT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(ParseGraph, IsolatedDeclaredVerticesKept) {
  const auto g = parse_graph("vertices: 1 2 3 4\n1 2\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.degree(g.index_of("4")), 0u);
}

TEST(ParseGraph, MalformedLineReportsLineNumber) {
  try {
    parse_graph("vertices: 1 2 3\n1 2\n1 2 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseGraph, LateHeaderRejected) {
  EXPECT_THROW(parse_graph("1 2\nvertices: 1 2\n"), ParseError);
}

TEST(ParseGraph, LoopRejected) {
  EXPECT_THROW(parse_graph("vertices: 1 2\n1 1\n"), DomainError);
  EXPECT_THROW(UndirectedGraph(2, {{1, 1}}), DomainError);
}

TEST(ParseGraph, SerializeRoundTripOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_test_graph(1 + trial % 9, 0.4, rng);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(Neighbors, KiteVertex2) {
  const auto g = kite();
  EXPECT_EQ(neighbors(g, g.index_of("2")), labels_to_set(g, {"1", "3", "4"}));
}

TEST(Neighbors, CompleteAndEmpty) {
  const auto k4 = UndirectedGraph::complete(4);
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(neighbors(k4, v).size(), 3u);
    EXPECT_FALSE(neighbors(k4, v).contains(v));
  }
  EXPECT_TRUE(neighbors(UndirectedGraph(4), 2).empty());
}

TEST(Neighbors, UnknownVertex) {
  EXPECT_THROW(neighbors(kite(), 9), LookupError);
  EXPECT_THROW(kite().index_of("nope"), LookupError);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(kite()).size(), 1u);

  const auto g = UndirectedGraph(3, {{0, 1}});
  const auto blocks = connected_components(g);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0], (VertexSet{0, 1}));
  EXPECT_EQ(blocks[1], (VertexSet{2}));

  EXPECT_EQ(connected_components(UndirectedGraph(4)).size(), 4u);
}

TEST(ConnectedComponents, PartitionWithNoCrossingEdge) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_test_graph(8, 0.2, rng);
    const auto blocks = connected_components(g);
    std::vector<int> block_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (Vertex v : blocks[i]) {
        EXPECT_EQ(block_of[v], -1);
        block_of[v] = static_cast<int>(i);
      }
      EXPECT_EQ(connected_components(induced_subgraph(g, blocks[i])).size(), 1u);
    }
    for (const auto& [a, b] : g.edges()) EXPECT_EQ(block_of[a], block_of[b]);
  }
}

TEST(InducedSubgraph, KiteTriangle) {
  const auto g = kite();
  const auto sub = induced_subgraph(g, labels_to_set(g, {"3", "4", "5"}));
  EXPECT_EQ(sub.vertex_count(), 3u);
  EXPECT_TRUE(sub.is_complete());
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"3", "4", "5"}));
}

TEST(InducedSubgraph, IdentityAndEmpty) {
  const auto g = kite();
  EXPECT_EQ(induced_subgraph(g, VertexSet{0, 1, 2, 3, 4}), g);
  EXPECT_EQ(induced_subgraph(g, VertexSet{}).vertex_count(), 0u);
  EXPECT_THROW(induced_subgraph(g, VertexSet{7}), DomainError);
}

TEST(Separates, KiteExamples) {
  const auto g = kite();
  const auto one = labels_to_set(g, {"1"});
  const auto five = labels_to_set(g, {"5"});
  EXPECT_TRUE(separates(g, one, five, labels_to_set(g, {"2"})));
  EXPECT_FALSE(separates(g, one, five, labels_to_set(g, {"3"})));
  EXPECT_FALSE(testing::path_enumeration_separates(g, one, five, labels_to_set(g, {"3"})));
}

TEST(Separates, DistinctComponentsWithEmptySet) {
  const auto g = UndirectedGraph(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(separates(g, VertexSet{0}, VertexSet{3}, VertexSet{}));
}

TEST(Separates, RejectsOverlapAndEmptySides) {
  const auto g = kite();
  EXPECT_THROW(separates(g, VertexSet{0}, VertexSet{0}, VertexSet{}), DomainError);
  EXPECT_THROW(separates(g, VertexSet{0}, VertexSet{4}, VertexSet{0}), DomainError);
  EXPECT_THROW(separates(g, VertexSet{}, VertexSet{4}, VertexSet{}), DomainError);
  EXPECT_THROW(separates(g, VertexSet{0}, VertexSet{}, VertexSet{}), DomainError);
}

TEST(CovarianceSeparates, PathAndKite) {
  const auto p = testing::path(3);
  EXPECT_TRUE(covariance_separates(p, VertexSet{0}, VertexSet{2}, VertexSet{}));
  EXPECT_FALSE(covariance_separates(p, VertexSet{0}, VertexSet{2}, VertexSet{1}));

  const auto g = kite();
  EXPECT_TRUE(covariance_separates(g, labels_to_set(g, {"1"}), labels_to_set(g, {"5"}),
                                   labels_to_set(g, {"3", "4"})));
}

// Property: S subset S' => separates(S) implies separates(S'); symmetric in A, B.
TEST(SeparatesProperty, MonotoneInSeparatorAndSymmetric) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 4 + trial % 5;  // 4..8
    const auto g = testing::random_test_graph(n, 0.35, rng);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        const auto subsets = testing::power_set(others(n, a, b));
        for (const auto& s : subsets) {
          const bool sep = separates(g, VertexSet{a}, VertexSet{b}, s);
          EXPECT_EQ(sep, separates(g, VertexSet{b}, VertexSet{a}, s));
          if (!sep) continue;
          for (const auto& bigger : subsets) {
            if (s.is_subset_of(bigger)) {
              EXPECT_TRUE(separates(g, VertexSet{a}, VertexSet{b}, bigger));
            }
          }
        }
      }
    }
  }
}

// Property: both criteria agree with literal path enumeration, including set-valued A and B.
TEST(SeparatesProperty, AgreesWithPathEnumeration) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 5;  // 3..7
    const auto g = testing::random_test_graph(n, 0.4, rng);
    for (int q = 0; q < 40; ++q) {
      // random disjoint A, B, S by assigning each vertex a role
      std::vector<Vertex> a, b, s;
      std::uniform_int_distribution<int> role(0, 3);
      for (Vertex v = 0; v < n; ++v) {
        switch (role(rng)) {
          case 0: a.push_back(v); break;
          case 1: b.push_back(v); break;
          case 2: s.push_back(v); break;
          default: break;
        }
      }
      if (a.empty() || b.empty()) continue;
      const VertexSet A(a), B(b), S(s);
      EXPECT_EQ(separates(g, A, B, S), testing::path_enumeration_separates(g, A, B, S));
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), Vertex{0});
      const auto rest = VertexSet(all).minus(A.united(B).united(S));
      EXPECT_EQ(covariance_separates(g, A, B, S), testing::path_enumeration_separates(g, A, B, rest));
    }
  }
}

TEST(VertexSetType, NormalisesAndComparesLexicographically) {
  EXPECT_EQ((VertexSet{3, 1, 3, 2}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(VertexSet::from_mask(0b1010), (VertexSet{1, 3}));
  EXPECT_TRUE((VertexSet{1}).is_subset_of(VertexSet{1, 2}));
  EXPECT_TRUE((VertexSet{1, 2}) < (VertexSet{1, 3}));
}

}  // namespace
}  // namespace lowcond
