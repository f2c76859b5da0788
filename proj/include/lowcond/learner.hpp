#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lowcond/errors.hpp"
#include "lowcond/graph.hpp"
#include "lowcond/oracle.hpp"
#include "lowcond/separators.hpp"
#include "lowcond/subsets.hpp"

namespace lowcond {

/// Why an edge is missing: the first independent query found for the pair.
struct DeletionWitness {
  Vertex a;
  Vertex b;
  VertexSet conditioning;
};

struct KGraphStep {
  std::size_t k = 0;
  UndirectedGraph graph;
  std::vector<DeletionWitness> witnesses;
  std::size_t d2 = 0;
  /// Oracle queries issued while building this graph.
  std::uint64_t queries = 0;
};

struct KGraphSequence {
  std::vector<KGraphStep> steps;
  /// Query budget ran out before the requested range was built.
  bool aborted = false;
};

struct LearnOptions {
  std::uint64_t max_queries = 10'000'000;
  /// Draw conditioning sets from adj(a) u adj(b) in the previous k-graph
  /// instead of all of V \ {a, b}. Off by default.
  bool neighbors_only = false;
  /// Largest k considered by the stopping rule; |V|-2 when unset.
  std::optional<std::size_t> max_k;
};

struct LearnReport {
  KGraphSequence sequence;
  std::optional<std::size_t> stopped_at;
  UndirectedGraph result;
  /// d2(G_k) at the stopping index.
  std::optional<std::size_t> certificate;
  std::uint64_t query_count = 0;
  std::vector<std::string> warnings;
};

namespace detail {

enum class WitnessSizes { exactly_k, up_to_k };

inline void check_order(const CIOracle& oracle, std::size_t k) {
  if (oracle.vertex_count() < 2 || k > oracle.vertex_count() - 2) {
    throw DomainError("conditioning order " + std::to_string(k) + " outside {0, ..., |V|-2} for |V| = " +
                      std::to_string(oracle.vertex_count()));
  }
}

inline KGraphStep build_step(const CIOracle& oracle, std::size_t k, WitnessSizes sizes,
                             std::uint64_t query_limit, const UndirectedGraph* candidates) {
  check_order(oracle, k);
  const std::size_t n = oracle.vertex_count();
  const auto first_query = oracle.query_count();
  KGraphStep step;
  step.k = k;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      // pairs already removed from the candidate graph stay removed
      if (candidates && !candidates->adjacent(a, b)) continue;
      std::vector<Vertex> pool;
      if (candidates) {
        pool = neighbors(*candidates, a).united(neighbors(*candidates, b)).minus(VertexSet{a, b}).members();
      } else {
        pool = others(n, a, b);
      }
      std::optional<VertexSet> witness;
      auto probe = [&](const VertexSet& s) {
        if (oracle.query_count() >= query_limit) {
          throw BudgetExceeded("oracle query budget exhausted at k = " + std::to_string(k));
        }
        if (oracle.independent(a, b, s)) witness = s;
        return witness.has_value();
      };
      const std::size_t smallest = sizes == WitnessSizes::exactly_k ? k : 0;
      for (std::size_t size = smallest; size <= k && !witness; ++size) {
        for_each_subset_of_size(pool, size, probe);
      }
      if (witness) {
        step.witnesses.push_back({a, b, std::move(*witness)});
      } else {
        edges.emplace_back(a, b);
      }
    }
  }
  step.graph = UndirectedGraph(oracle.labels(), edges);
  step.d2 = degree_two(step.graph);
  step.queries = oracle.query_count() - first_query;
  return step;
}

inline std::uint64_t limit_from_now(const CIOracle& oracle, std::uint64_t budget) {
  const auto now = oracle.query_count();
  return budget > UINT64_MAX - now ? UINT64_MAX : now + budget;
}

}  // namespace detail

/// k-graph: (a, b) is missing iff some S of size exactly k gives independence.
inline KGraphStep build_k_graph(const CIOracle& oracle, std::size_t k, const LearnOptions& options = {}) {
  return detail::build_step(oracle, k, detail::WitnessSizes::exactly_k,
                            detail::limit_from_now(oracle, options.max_queries), nullptr);
}

/// k-partial graph: (a, b) is missing iff some S with |S| <= k gives independence.
inline KGraphStep build_k_partial_graph(const CIOracle& oracle, std::size_t k,
                                        const LearnOptions& options = {}) {
  return detail::build_step(oracle, k, detail::WitnessSizes::up_to_k,
                            detail::limit_from_now(oracle, options.max_queries), nullptr);
}

/// G_0, ..., G_max_k. Stops early (aborted) when the query budget runs out.
inline KGraphSequence k_graph_sequence(const CIOracle& oracle, std::size_t max_k,
                                       const LearnOptions& options = {}) {
  detail::check_order(oracle, max_k);
  const auto limit = detail::limit_from_now(oracle, options.max_queries);
  KGraphSequence sequence;
  try {
    for (std::size_t k = 0; k <= max_k; ++k) {
      const UndirectedGraph* candidates =
          options.neighbors_only && k > 0 ? &sequence.steps.back().graph : nullptr;
      sequence.steps.push_back(
          detail::build_step(oracle, k, detail::WitnessSizes::exactly_k, limit, candidates));
    }
  } catch (const BudgetExceeded&) {
    sequence.aborted = true;
  }
  return sequence;
}

/// Builds G_1, G_2, ... and stops at the first k with d2(G_k) <= k. G_0 is
/// recorded but never tested by the rule.
inline LearnReport learn_with_stopping(const CIOracle& oracle, const LearnOptions& options = {}) {
  const std::size_t n = oracle.vertex_count();
  if (n < 3) throw DomainError("learning needs at least 3 vertices (|V| = " + std::to_string(n) + ")");
  const std::size_t max_k = options.max_k.value_or(n - 2);
  if (max_k < 1 || max_k > n - 2) {
    throw DomainError("max_k must lie in {1, ..., " + std::to_string(n - 2) + "}");
  }
  const auto first_query = oracle.query_count();
  const auto limit = detail::limit_from_now(oracle, options.max_queries);

  LearnReport report;
  auto& steps = report.sequence.steps;
  try {
    for (std::size_t k = 0; k <= max_k; ++k) {
      const UndirectedGraph* candidates = options.neighbors_only && k > 0 ? &steps.back().graph : nullptr;
      steps.push_back(detail::build_step(oracle, k, detail::WitnessSizes::exactly_k, limit, candidates));
      if (k >= 1 && steps.back().d2 <= k) {
        report.stopped_at = k;
        report.certificate = steps.back().d2;
        break;
      }
    }
  } catch (const BudgetExceeded& e) {
    report.sequence.aborted = true;
    report.warnings.emplace_back(std::string(e.what()) + "; report is partial");
  }

  if (report.stopped_at) {
    report.result = steps.back().graph;
  } else {
    // nothing built yet: no edge has been ruled out
    report.result = steps.empty() ? UndirectedGraph(oracle.labels(), UndirectedGraph::complete(n).edges())
                                  : steps.back().graph;
    if (!report.sequence.aborted) {
      report.warnings.emplace_back("no k in {1, ..., " + std::to_string(max_k) +
                                   "} satisfies d2(G_k) <= k: either d2 of the true graph exceeds "
                                   "|V|-2 or the oracle is not perfectly Markov");
    }
  }
  report.query_count = oracle.query_count() - first_query;
  return report;
}

/// Number of vertex pairs whose adjacency differs.
inline std::size_t structural_hamming_distance(const UndirectedGraph& g, const UndirectedGraph& h) {
  if (g.labels() != h.labels()) throw DomainError("graphs are on different vertex sets");
  std::size_t distance = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(a, b) != h.adjacent(a, b)) ++distance;
    }
  }
  return distance;
}

}  // namespace lowcond
