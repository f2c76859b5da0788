#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lowcond/errors.hpp"

namespace lowcond {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// Members are the set bits of `mask` (bit i <=> vertex i).
  static VertexSet from_mask(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1U) out.push_back(v);
    }
    return VertexSet(std::move(out));
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  bool intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
      if (*a == *b) return true;
      if (*a < *b) {
        ++a;
      } else {
        ++b;
      }
    }
    return false;
  }

  VertexSet united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Immutable loop-free simple undirected graph over labelled vertices.
///
/// Vertices are dense indices 0..n-1; every index carries a unique string
/// label which is what parsers and reports use. Derived graphs (subgraphs,
/// edge edits) are new values.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Vertices labelled "1".."n".
  explicit UndirectedGraph(std::size_t n, const std::vector<Edge>& edges = {})
      : UndirectedGraph(default_labels(n), edges) {}

  UndirectedGraph(std::vector<std::string> labels, const std::vector<Edge>& edges)
      : labels_(std::move(labels)),
        adjacency_(labels_.size()),
        matrix_(labels_.size() * labels_.size(), 0) {
    for (Vertex v = 0; v < labels_.size(); ++v) {
      if (labels_[v].empty()) throw DomainError("empty vertex label");
      if (!index_.emplace(labels_[v], v).second) {
        throw DomainError("duplicate vertex label '" + labels_[v] + "'");
      }
    }
    for (const auto& [a, b] : edges) {
      check_vertex(a);
      check_vertex(b);
      if (a == b) throw DomainError("loop edge on vertex '" + labels_[a] + "'");
      auto& cell = matrix_[a * labels_.size() + b];
      if (cell) continue;
      cell = 1;
      matrix_[b * labels_.size() + a] = 1;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
      ++edge_count_;
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  static UndirectedGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return UndirectedGraph(n, edges);
  }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return labels;
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const std::string& label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
  }

  Vertex index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) throw LookupError("unknown vertex '" + std::string(label) + "'");
    return it->second;
  }

  bool has_vertex(Vertex v) const noexcept { return v < labels_.size(); }

  bool adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return matrix_[a * labels_.size() + b] != 0;
  }

  /// Sorted neighbour list of `v`.
  const std::vector<Vertex>& adjacency(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return adjacency(v).size(); }

  /// Edges as (a, b) with a < b, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex a = 0; a < labels_.size(); ++a) {
      for (Vertex b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// True when every pair of distinct vertices is adjacent (vacuously for n <= 1).
  bool is_complete() const noexcept {
    const std::size_t n = labels_.size();
    return n < 2 || edge_count_ == n * (n - 1) / 2;
  }

  UndirectedGraph with_edge(Vertex a, Vertex b) const {
    auto list = edges();
    list.emplace_back(a, b);
    return UndirectedGraph(labels_, list);
  }

  UndirectedGraph without_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    auto list = edges();
    std::erase_if(list, [&](const Edge& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
    return UndirectedGraph(labels_, list);
  }

  friend bool operator==(const UndirectedGraph& x, const UndirectedGraph& y) {
    return x.labels_ == y.labels_ && x.matrix_ == y.matrix_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= labels_.size()) {
      throw LookupError("vertex index " + std::to_string(v) + " out of range (|V| = " +
                        std::to_string(labels_.size()) + ")");
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
  std::unordered_map<std::string, Vertex> index_;
  std::size_t edge_count_ = 0;
};

namespace detail {

inline void check_members(const UndirectedGraph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) {
      throw LookupError("vertex index " + std::to_string(v) + " out of range");
    }
  }
}

// Marks every vertex reachable from `sources` without stepping on a blocked vertex.
inline std::vector<char> reachable(const UndirectedGraph& g, const VertexSet& sources,
                                   const std::vector<char>& blocked) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!blocked[s] && !seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.adjacency(v)) {
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

inline std::vector<char> mask_of(const UndirectedGraph& g, const VertexSet& s) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (Vertex v : s) mask[v] = 1;
  return mask;
}

inline void check_separation_args(const UndirectedGraph& g, const VertexSet& a,
                                  const VertexSet& b, const VertexSet& s) {
  check_members(g, a);
  check_members(g, b);
  check_members(g, s);
  if (a.empty() || b.empty()) throw DomainError("A and B must be non-empty");
  if (a.intersects(b) || a.intersects(s) || b.intersects(s)) {
    throw DomainError("A, B and S must be pairwise disjoint");
  }
}

}  // namespace detail

inline VertexSet neighbors(const UndirectedGraph& g, Vertex v) {
  return VertexSet(g.adjacency(v));
}

/// Blocks ordered by their smallest member.
inline std::vector<VertexSet> connected_components(const UndirectedGraph& g) {
  std::vector<VertexSet> blocks;
  std::vector<char> assigned(g.vertex_count(), 0);
  const std::vector<char> none(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (assigned[v]) continue;
    auto seen = detail::reachable(g, VertexSet{v}, none);
    std::vector<Vertex> block;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (seen[w]) {
        block.push_back(w);
        assigned[w] = 1;
      }
    }
    blocks.emplace_back(std::move(block));
  }
  return blocks;
}

/// Subgraph on `u`, vertices renumbered in increasing order of their original index.
inline UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSet& u) {
  for (Vertex v : u) {
    if (!g.has_vertex(v)) throw DomainError("induced_subgraph: U is not a subset of V");
  }
  std::vector<std::string> labels;
  std::vector<Vertex> renumber(g.vertex_count(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    labels.push_back(g.labels()[u[i]]);
    renumber[u[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (u.contains(a) && u.contains(b)) edges.emplace_back(renumber[a], renumber[b]);
  }
  return UndirectedGraph(std::move(labels), edges);
}

/// True iff every path from A to B meets S.
inline bool separates(const UndirectedGraph& g, const VertexSet& a, const VertexSet& b,
                      const VertexSet& s) {
  detail::check_separation_args(g, a, b, s);
  const auto seen = detail::reachable(g, a, detail::mask_of(g, s));
  return std::none_of(b.begin(), b.end(), [&](Vertex v) { return seen[v] != 0; });
}

/// Bi-directed (covariance graph) criterion: V \ (A u B u S) separates A and B.
inline bool covariance_separates(const UndirectedGraph& g, const VertexSet& a,
                                 const VertexSet& b, const VertexSet& s) {
  detail::check_separation_args(g, a, b, s);
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!a.contains(v) && !b.contains(v) && !s.contains(v)) rest.push_back(v);
  }
  return separates(g, a, b, VertexSet(std::move(rest)));
}

}  // namespace lowcond
