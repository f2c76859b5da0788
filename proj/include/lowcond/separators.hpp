#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lowcond/errors.hpp"
#include "lowcond/graph.hpp"

namespace lowcond {

/// A natural number or +infinity. Every natural compares below infinity.
class SeparabilityOrder {
 public:
  constexpr explicit SeparabilityOrder(std::size_t value) : value_(value), infinite_(false) {}

  static constexpr SeparabilityOrder infinite() {
    SeparabilityOrder order(0);
    order.infinite_ = true;
    return order;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }

  std::size_t value() const {
    if (infinite_) throw DomainError("separability order is infinite");
    return value_;
  }

  std::string to_string() const { return infinite_ ? "infinite" : std::to_string(value_); }

  friend constexpr bool operator==(const SeparabilityOrder& x, const SeparabilityOrder& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const SeparabilityOrder& x,
                                                    const SeparabilityOrder& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ <=> y.infinite_;
    return x.value_ <=> y.value_;
  }
  friend constexpr bool operator==(const SeparabilityOrder& x, std::size_t n) {
    return x == SeparabilityOrder(n);
  }
  friend constexpr std::strong_ordering operator<=>(const SeparabilityOrder& x, std::size_t n) {
    return x <=> SeparabilityOrder(n);
  }

 private:
  std::size_t value_;
  bool infinite_;
};

struct PairOrder {
  Vertex a;
  Vertex b;
  std::size_t order;
};

struct SeparatorWitness {
  Vertex a;
  Vertex b;
  VertexSet separator;
};

struct SeparabilityReport {
  SeparabilityOrder so = SeparabilityOrder::infinite();
  std::size_t d = 0;
  std::size_t d2 = 0;
  /// so(a, b | G) for every non-adjacent pair a < b, lexicographic.
  std::vector<PairOrder> pair_orders;
  /// First pair attaining `so` with a minimum-size minimal separator; empty for complete graphs.
  std::optional<SeparatorWitness> witness;
};

namespace detail {

inline void check_pair(const UndirectedGraph& g, Vertex a, Vertex b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw LookupError("vertex index out of range");
  if (a == b) throw DomainError("separator query needs two distinct vertices");
  if (g.adjacent(a, b)) throw DomainError("adjacent pair has no separator");
}

inline void check_candidate(const UndirectedGraph& g, Vertex a, Vertex b, const VertexSet& s) {
  check_pair(g, a, b);
  check_members(g, s);
  if (s.contains(a) || s.contains(b)) throw DomainError("separator must avoid both endpoints");
}

// Edmonds-Karp on a small residual network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, int capacity) {
    out_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    out_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  int max_flow(std::size_t source, std::size_t sink) {
    int total = 0;
    std::vector<std::size_t> via(out_.size());
    while (true) {
      std::vector<char> seen(out_.size(), 0);
      std::deque<std::size_t> queue{source};
      seen[source] = 1;
      while (!queue.empty() && !seen[sink]) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto id : out_[u]) {
          const auto& arc = arcs_[id];
          if (arc.residual > 0 && !seen[arc.to]) {
            seen[arc.to] = 1;
            via[arc.to] = id;
            queue.push_back(arc.to);
          }
        }
      }
      if (!seen[sink]) return total;
      int push = std::numeric_limits<int>::max();
      for (auto v = sink; v != source; v = arcs_[via[v] ^ 1U].to) {
        push = std::min(push, arcs_[via[v]].residual);
      }
      for (auto v = sink; v != source; v = arcs_[via[v] ^ 1U].to) {
        arcs_[via[v]].residual -= push;
        arcs_[via[v] ^ 1U].residual += push;
      }
      total += push;
    }
  }

  /// Nodes reachable from `source` in the residual network.
  std::vector<char> residual_reach(std::size_t source) const {
    std::vector<char> seen(out_.size(), 0);
    std::deque<std::size_t> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto id : out_[u]) {
        if (arcs_[id].residual > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          queue.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    int residual;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace detail

/// True iff S meets every path between a and b.
inline bool is_separator(const UndirectedGraph& g, Vertex a, Vertex b, const VertexSet& s) {
  detail::check_candidate(g, a, b, s);
  return separates(g, VertexSet{a}, VertexSet{b}, s);
}

/// S separates a and b, and every member of S has a neighbour in both the
/// a-side and the b-side component of G \ S (equivalent to "no proper subset
/// separates").
inline bool is_minimal_separator(const UndirectedGraph& g, Vertex a, Vertex b,
                                 const VertexSet& s) {
  detail::check_candidate(g, a, b, s);
  const auto blocked = detail::mask_of(g, s);
  const auto side_a = detail::reachable(g, VertexSet{a}, blocked);
  if (side_a[b]) return false;
  const auto side_b = detail::reachable(g, VertexSet{b}, blocked);
  for (Vertex v : s) {
    const auto& nbrs = g.adjacency(v);
    const bool touches_a = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return side_a[w] != 0; });
    const bool touches_b = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return side_b[w] != 0; });
    if (!touches_a || !touches_b) return false;
  }
  return true;
}

/// ms_G(a, b) by filtering every subset of V \ {a, b}; ordered by size, then
/// lexicographically. Refuses graphs larger than `max_vertices`.
inline std::vector<VertexSet> minimal_separators(const UndirectedGraph& g, Vertex a, Vertex b,
                                                 std::size_t max_vertices = 16) {
  detail::check_pair(g, a, b);
  if (g.vertex_count() > max_vertices || g.vertex_count() > 62) {
    throw DomainError("minimal_separators: |V| = " + std::to_string(g.vertex_count()) +
                      " exceeds the enumeration cap of " + std::to_string(max_vertices));
  }
  std::vector<VertexSet> found;
  // a disconnected pair has no minimal separators by convention
  if (!detail::reachable(g, VertexSet{a}, std::vector<char>(g.vertex_count(), 0))[b]) return found;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != a && v != b) pool.push_back(v);
  }
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1U) members.push_back(pool[i]);
    }
    VertexSet s(std::move(members));
    if (is_minimal_separator(g, a, b, s)) found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end(), [](const VertexSet& x, const VertexSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return found;
}

/// A minimum-cardinality (a, b) vertex cut, via max-flow on the vertex-split
/// digraph. Empty when a and b lie in different components.
inline VertexSet min_vertex_cut(const UndirectedGraph& g, Vertex a, Vertex b) {
  detail::check_pair(g, a, b);
  const std::size_t n = g.vertex_count();
  const int unbounded = static_cast<int>(n) + 1;
  // vertex v -> in-node 2v, out-node 2v+1
  detail::FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(2 * v, 2 * v + 1, (v == a || v == b) ? unbounded : 1);
    for (Vertex w : g.adjacency(v)) net.add_arc(2 * v + 1, 2 * w, unbounded);
  }
  net.max_flow(2 * a + 1, 2 * b);
  const auto reach = net.residual_reach(2 * a + 1);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < n; ++v) {
    if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
  }
  return VertexSet(std::move(cut));
}

/// so(a, b | G): size of a smallest minimal separator, 0 across components.
inline std::size_t min_separator_size(const UndirectedGraph& g, Vertex a, Vertex b) {
  return min_vertex_cut(g, a, b).size();
}

/// The minimal separator N(C_b) inside N(a), where C_b is the component of b
/// in G \ ({a} u N(a)).
inline VertexSet minimal_separator_near(const UndirectedGraph& g, Vertex a, Vertex b) {
  detail::check_pair(g, a, b);
  const std::vector<char> none(g.vertex_count(), 0);
  if (!detail::reachable(g, VertexSet{a}, none)[b]) {
    throw DomainError("vertices lie in different components: no separator needed");
  }
  auto blocked = detail::mask_of(g, neighbors(g, a));
  blocked[a] = 1;
  const auto component = detail::reachable(g, VertexSet{b}, blocked);
  std::vector<Vertex> boundary;
  for (Vertex v : g.adjacency(a)) {
    const auto& nbrs = g.adjacency(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return component[w] != 0; })) {
      boundary.push_back(v);
    }
  }
  return VertexSet(std::move(boundary));
}

inline std::size_t degree_of(const UndirectedGraph& g, Vertex v) { return g.degree(v); }

inline std::size_t degree(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw DomainError("degree of a graph without vertices");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Number of neighbours of v that themselves have degree >= 2.
inline std::size_t degree_two_of(const UndirectedGraph& g, Vertex v) {
  const auto& nbrs = g.adjacency(v);
  return static_cast<std::size_t>(
      std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) >= 2; }));
}

inline std::size_t degree_two(const UndirectedGraph& g) {
  if (g.vertex_count() == 0) throw DomainError("degree two of a graph without vertices");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, degree_two_of(g, v));
  return best;
}

inline SeparabilityOrder separability_order(const UndirectedGraph& g) {
  std::optional<std::size_t> best;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(a, b)) continue;
      best = std::max(best.value_or(0), min_separator_size(g, a, b));
    }
  }
  return best ? SeparabilityOrder(*best) : SeparabilityOrder::infinite();
}

inline SeparabilityReport analyze_separability(const UndirectedGraph& g) {
  SeparabilityReport report;
  report.d = degree(g);
  report.d2 = degree_two(g);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(a, b)) continue;
      auto cut = min_vertex_cut(g, a, b);
      if (!report.witness || cut.size() > report.witness->separator.size()) {
        report.witness = SeparatorWitness{a, b, cut};
      }
      report.pair_orders.push_back({a, b, cut.size()});
    }
  }
  if (report.witness) report.so = SeparabilityOrder(report.witness->separator.size());
  return report;
}

}  // namespace lowcond
