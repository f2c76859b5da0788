#pragma once

// Property suites over exhaustive small graphs plus seeded random graphs.
// Each property keeps a violation tally and the smallest counterexample seen
// (fewest vertices, then fewest edges), dumped as an edge-list document.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lowcond/edge_list.hpp"
#include "lowcond/graph.hpp"
#include "lowcond/learner.hpp"
#include "lowcond/oracle.hpp"
#include "lowcond/separators.hpp"

namespace lowcond {

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::string> counterexample;
};

struct VerifyOptions {
  /// Size of the random graphs.
  std::size_t vertices = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// All labelled graphs on 1..min(vertices, exhaustive_max) vertices.
  std::size_t exhaustive_max = 6;
  /// Self-test: flip the oracle answer for the query (1, 2 | {3}).
  bool inject_mutant = false;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  std::uint64_t graphs_checked = 0;

  bool passed() const {
    for (const auto& p : properties) {
      if (p.violations != 0) return false;
    }
    return true;
  }

  const PropertyResult& property(const std::string& name) const {
    for (const auto& p : properties) {
      if (p.name == name) return p;
    }
    throw LookupError("no property named '" + name + "'");
  }
};

/// Smallest |S| over all S in V \ {a, b} that separate a and b, by plain
/// subset enumeration (independent of the max-flow route).
inline std::size_t brute_force_min_separator_size(const UndirectedGraph& g, Vertex a, Vertex b) {
  const auto pool = others(g.vertex_count(), a, b);
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    if (for_each_subset_of_size(pool, k, [&](const VertexSet& s) {
          return separates(g, VertexSet{a}, VertexSet{b}, s);
        })) {
      return k;
    }
  }
  return pool.size();
}

/// Every labelled graph on n vertices, in edge-mask order.
inline std::vector<UndirectedGraph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<UndirectedGraph> graphs;
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  graphs.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) edges.push_back(pairs[i]);
    }
    graphs.emplace_back(n, edges);
  }
  return graphs;
}

/// Erdos-Renyi graph: each pair present independently with probability p.
inline UndirectedGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph(n, edges);
}

namespace detail {

inline bool edges_subset(const UndirectedGraph& small, const UndirectedGraph& big) {
  for (const auto& [a, b] : small.edges()) {
    if (!big.adjacent(a, b)) return false;
  }
  return true;
}

inline bool all_components_complete(const UndirectedGraph& g) {
  for (const auto& block : connected_components(g)) {
    if (!induced_subgraph(g, block).is_complete()) return false;
  }
  return true;
}

class PropertyBook {
 public:
  PropertyResult& operator[](const std::string& name) {
    auto [it, inserted] = index_.emplace(name, results_.size());
    if (inserted) results_.push_back({name, 0, 0, std::nullopt});
    return results_[it->second];
  }

  void record(const std::string& name, const UndirectedGraph& g, bool holds, const std::string& note = {}) {
    auto& r = (*this)[name];
    ++r.checked;
    if (holds) return;
    ++r.violations;
    auto& best = best_[name];
    if (!r.counterexample || g.vertex_count() < best.first ||
        (g.vertex_count() == best.first && g.edge_count() < best.second)) {
      best = {g.vertex_count(), g.edge_count()};
      r.counterexample = "# property " + name + (note.empty() ? "" : ": " + note) + "\n" + serialize_graph(g);
    }
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::vector<PropertyResult> results_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> best_;
};

inline std::string pair_note(const UndirectedGraph& g, Vertex a, Vertex b) {
  return "pair (" + g.label(a) + ", " + g.label(b) + ")";
}

inline void check_separator_properties(const UndirectedGraph& g, PropertyBook& book) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return;
  const auto report = analyze_separability(g);
  const auto so = report.so;
  const bool complete = g.is_complete();

  book.record("so_zero_iff_components_complete", g,
              (so == 0) == (!complete && all_components_complete(g)));
  book.record("so_infinite_iff_complete", g, so.is_infinite() == complete);

  if (!complete) {
    book.record("so_at_most_degree", g, so <= report.d);
    if (connected_components(g).size() == 1) book.record("so_at_most_degree_two", g, so <= report.d2);
  }

  if (!so.is_infinite() && so > 0) {
    const std::size_t m = so.value();
    const auto& w = *report.witness;
    book.record("witness_is_minimal_of_size_so", g,
                w.separator.size() == m && is_minimal_separator(g, w.a, w.b, w.separator),
                pair_note(g, w.a, w.b));

    for (const auto& pair : report.pair_orders) {
      VertexSet padded = min_vertex_cut(g, pair.a, pair.b);
      for (Vertex v = 0; v < n && padded.size() < m; ++v) {
        if (v != pair.a && v != pair.b && !padded.contains(v)) padded = padded.united(VertexSet{v});
      }
      book.record("every_pair_has_separator_within_so", g,
                  padded.size() == m && is_separator(g, pair.a, pair.b, padded), pair_note(g, pair.a, pair.b));
    }

    SeparabilityOrder by_components(0);
    for (const auto& block : connected_components(g)) {
      const auto sub = induced_subgraph(g, block);
      if (!sub.is_complete()) by_components = std::max(by_components, separability_order(sub));
    }
    book.record("so_is_max_over_components", g, by_components == so);
  }

  for (const auto& pair : report.pair_orders) {
    book.record("min_cut_equals_brute_force", g,
                pair.order == brute_force_min_separator_size(g, pair.a, pair.b), pair_note(g, pair.a, pair.b));
    const std::vector<char> none(n, 0);
    if (reachable(g, VertexSet{pair.a}, none)[pair.b]) {
      for (const auto& [x, y] : {std::pair{pair.a, pair.b}, std::pair{pair.b, pair.a}}) {
        const auto near = minimal_separator_near(g, x, y);
        bool ok = is_minimal_separator(g, x, y, near) && near.is_subset_of(neighbors(g, x));
        for (Vertex v : near) ok = ok && g.degree(v) >= 2;
        book.record("minimal_separator_near_is_minimal_in_neighbourhood", g, ok, pair_note(g, x, y));
      }
    }
  }

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) {
        book.record("degree_two_edge_monotone", g, report.d2 <= degree_two(g.with_edge(a, b)),
                    "adding " + pair_note(g, a, b));
      }
    }
  }

  if (!so.is_infinite() && n >= 3 && so < n - 2) {
    for (const auto& pair : report.pair_orders) {
      bool found = false;
      for (Vertex c = 0; c < n && !found; ++c) {
        if (c != pair.a && c != pair.b) {
          found = covariance_separates(g, VertexSet{pair.a}, VertexSet{pair.b}, VertexSet{c});
        }
      }
      book.record("singleton_covariance_separator", g, found, pair_note(g, pair.a, pair.b));
    }
  }
}

inline std::unique_ptr<CIOracle> make_oracle(const UndirectedGraph& g, bool mutant) {
  if (!mutant) return std::make_unique<GraphOracle>(g);
  return std::make_unique<FunctionOracle>(g.labels(), [g](Vertex a, Vertex b, const VertexSet& s) {
    const bool truth = separates(g, VertexSet{a}, VertexSet{b}, s);
    const bool flipped = a == 0 && b == 1 && s == VertexSet{2};
    return flipped ? !truth : truth;
  });
}

inline void check_learning_properties(const UndirectedGraph& g, bool mutant, PropertyBook& book) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return;
  const auto oracle = make_oracle(g, mutant);
  const auto so = separability_order(g);
  const bool connected = connected_components(g).size() == 1;

  std::vector<UndirectedGraph> k_graphs;
  for (std::size_t k = 0; k <= n - 2; ++k) k_graphs.push_back(build_k_graph(*oracle, k).graph);

  if (connected && !g.is_complete()) {
    book.record("k_graph_at_so_is_true_graph", g, k_graphs[so.value()] == g);
  }

  bool nested = true;
  for (std::size_t j = 1; j <= n - 2; ++j) {
    for (std::size_t k = j; k <= n - 2; ++k) nested = nested && edges_subset(k_graphs[k], k_graphs[j]);
  }
  book.record("k_graphs_nested", g, nested);

  for (std::size_t k = 1; k <= n - 2; ++k) {
    const auto partial = build_k_partial_graph(*oracle, k).graph;
    book.record("true_edges_within_k_graph_equal_partial", g,
                edges_subset(g, k_graphs[k]) && partial == k_graphs[k], "k = " + std::to_string(k));
  }

  // 0-1 graph: E0 n E1 = E1.
  book.record("e1_subset_of_e0", g, edges_subset(k_graphs[1], k_graphs[0]));

  const auto learned = learn_with_stopping(*oracle);
  if (g.is_complete()) {
    book.record("complete_graph_warning_path", g,
                !learned.stopped_at && learned.result == g && !learned.warnings.empty());
  } else if (degree_two(g) <= n - 2) {
    bool ok = learned.stopped_at.has_value() && learned.result == g;
    if (ok) {
      const std::size_t k = *learned.stopped_at;
      const std::size_t d2 = degree_two(learned.result);
      ok = *learned.certificate == d2 && d2 <= k && separability_order(learned.result) <= d2;
    }
    book.record("stopping_rule_recovers_graph", g, ok);
  }
}

inline void check_determinism(const UndirectedGraph& g, bool mutant, PropertyBook& book) {
  if (g.vertex_count() < 3) return;
  const auto first = make_oracle(g, mutant);
  const auto second = make_oracle(g, mutant);
  const auto x = learn_with_stopping(*first);
  const auto y = learn_with_stopping(*second);
  bool same = x.stopped_at == y.stopped_at && x.result == y.result && x.query_count == y.query_count &&
              x.sequence.steps.size() == y.sequence.steps.size();
  for (std::size_t i = 0; same && i < x.sequence.steps.size(); ++i) {
    const auto& s = x.sequence.steps[i];
    const auto& t = y.sequence.steps[i];
    same = s.graph == t.graph && s.queries == t.queries && s.witnesses.size() == t.witnesses.size();
    for (std::size_t j = 0; same && j < s.witnesses.size(); ++j) {
      same = s.witnesses[j].conditioning == t.witnesses[j].conditioning;
    }
  }
  book.record("learning_is_deterministic", g, same);
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& options) {
  detail::PropertyBook book;
  VerifyReport report;
  auto check = [&](const UndirectedGraph& g, bool with_determinism) {
    ++report.graphs_checked;
    detail::check_separator_properties(g, book);
    detail::check_learning_properties(g, options.inject_mutant, book);
    if (with_determinism) detail::check_determinism(g, options.inject_mutant, book);
  };

  const std::size_t exhaustive = std::min(options.vertices, options.exhaustive_max);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    for (const auto& g : all_graphs(n)) check(g, false);
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const double p = density(rng);
    check(random_graph(options.vertices, p, rng), true);
  }
  report.properties = book.take();
  return report;
}

}  // namespace lowcond
