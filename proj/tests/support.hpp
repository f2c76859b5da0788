#pragma once

// Test-only oracles. These follow the definitions literally (simple-path
// enumeration, all-subsets minimality) and share no code with the library
// routes they check.

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "lowcond/edge_list.hpp"
#include "lowcond/graph.hpp"

namespace lowcond {

// readable gtest failure output
inline void PrintTo(const UndirectedGraph& g, std::ostream* os) { *os << "\n" << serialize_graph(g); }

}  // namespace lowcond

namespace lowcond::testing {

inline UndirectedGraph kite() {
  return parse_graph("vertices: 1 2 3 4 5\n1 2\n2 3\n2 4\n3 4\n3 5\n4 5\n");
}

inline UndirectedGraph star() { return parse_graph("vertices: c x y z\nc x\nc y\nc z\n"); }

inline UndirectedGraph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return UndirectedGraph(n, edges);
}

inline VertexSet labels_to_set(const UndirectedGraph& g, std::initializer_list<const char*> labels) {
  std::vector<Vertex> out;
  for (const char* l : labels) out.push_back(g.index_of(l));
  return VertexSet(std::move(out));
}

/// Every simple path from a vertex of A to a vertex of B meets S.
inline bool path_enumeration_separates(const UndirectedGraph& g, const VertexSet& a, const VertexSet& b,
                                       const VertexSet& s) {
  std::vector<char> on_path(g.vertex_count(), 0);
  // true when an S-avoiding simple path reaches B
  std::function<bool(Vertex)> escape = [&](Vertex v) {
    if (b.contains(v)) return true;
    on_path[v] = 1;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w != v && g.adjacent(v, w) && !on_path[w] && !s.contains(w) && escape(w)) {
        on_path[v] = 0;
        return true;
      }
    }
    on_path[v] = 0;
    return false;
  };
  for (Vertex start : a) {
    if (escape(start)) return false;
  }
  return true;
}

/// S separates and no proper subset of S does.
inline bool definitional_minimal(const UndirectedGraph& g, Vertex a, Vertex b, const VertexSet& s) {
  if (!path_enumeration_separates(g, VertexSet{a}, VertexSet{b}, s)) return false;
  const std::uint64_t full = (std::uint64_t{1} << s.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1U) sub.push_back(s[i]);
    }
    if (path_enumeration_separates(g, VertexSet{a}, VertexSet{b}, VertexSet(sub))) return false;
  }
  return true;
}

/// All subsets of `pool` as vertex sets.
inline std::vector<VertexSet> power_set(const std::vector<Vertex>& pool) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1U) members.push_back(pool[i]);
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline UndirectedGraph random_test_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph(n, edges);
}

}  // namespace lowcond::testing
