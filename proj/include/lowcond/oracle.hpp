#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lowcond/errors.hpp"
#include "lowcond/graph.hpp"

namespace lowcond {

/// Answers "is X_a independent of X_b given X_S?" over a fixed vertex domain.
///
/// Queries are validated and tallied here; backends implement test() and
/// always see a < b, which makes every oracle symmetric. The tally is atomic
/// so one oracle may serve concurrent readers.
class CIOracle {
 public:
  virtual ~CIOracle() = default;
  CIOracle(const CIOracle&) = delete;
  CIOracle& operator=(const CIOracle&) = delete;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::uint64_t query_count() const noexcept { return queries_.load(std::memory_order_relaxed); }

  /// True means independent.
  bool independent(Vertex a, Vertex b, const VertexSet& s) const {
    if (a >= vertex_count() || b >= vertex_count()) throw LookupError("oracle query: vertex out of range");
    if (a == b) throw DomainError("oracle query: a and b must differ");
    for (Vertex v : s) {
      if (v >= vertex_count()) throw LookupError("oracle query: conditioning vertex out of range");
    }
    if (s.contains(a) || s.contains(b)) throw DomainError("oracle query: conditioning set contains a or b");
    queries_.fetch_add(1, std::memory_order_relaxed);
    return a < b ? test(a, b, s) : test(b, a, s);
  }

 protected:
  explicit CIOracle(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  virtual bool test(Vertex a, Vertex b, const VertexSet& s) const = 0;

 private:
  std::vector<std::string> labels_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

/// Perfectly Markov oracle for a known concentration graph: independence is separation.
class GraphOracle : public CIOracle {
 public:
  explicit GraphOracle(UndirectedGraph g) : CIOracle(g.labels()), graph_(std::move(g)) {}

  const UndirectedGraph& graph() const noexcept { return graph_; }

  /// Vector-level query X_A _||_ X_B | X_S.
  bool independent_sets(const VertexSet& a, const VertexSet& b, const VertexSet& s) const {
    return separates(graph_, a, b, s);
  }

 protected:
  bool test(Vertex a, Vertex b, const VertexSet& s) const override {
    return separates(graph_, VertexSet{a}, VertexSet{b}, s);
  }

 private:
  UndirectedGraph graph_;
};

/// Oracle backed by an arbitrary predicate, called with a < b.
class FunctionOracle : public CIOracle {
 public:
  using Predicate = std::function<bool(Vertex, Vertex, const VertexSet&)>;

  FunctionOracle(std::vector<std::string> labels, Predicate predicate)
      : CIOracle(std::move(labels)), predicate_(std::move(predicate)) {}

 protected:
  bool test(Vertex a, Vertex b, const VertexSet& s) const override { return predicate_(a, b, s); }

 private:
  Predicate predicate_;
};

}  // namespace lowcond
