#pragma once

// Subcommand bodies of the lowcond CLI. Each returns a JSON document, a
// plain-text rendering and an exit code; library exceptions propagate and
// are mapped to exit codes by exit_code_for().

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "lowcond/data.hpp"
#include "lowcond/edge_list.hpp"
#include "lowcond/errors.hpp"
#include "lowcond/gaussian.hpp"
#include "lowcond/learner.hpp"
#include "lowcond/report.hpp"
#include "lowcond/separators.hpp"
#include "lowcond/verify.hpp"

namespace lowcond::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kGenerationError = 3,
  kPropertyFailure = 4,
};

struct CommandOutput {
  int exit_code = kSuccess;
  nlohmann::json document;
  std::string text;
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const GenerationError*>(&e)) return kGenerationError;
  return kInputError;
}

namespace detail {

inline std::string join_edges(const UndirectedGraph& g) {
  std::string out;
  for (const auto& [a, b] : g.edges()) out += " " + g.label(a) + "-" + g.label(b);
  return out.empty() ? " (none)" : out;
}

template <typename T>
std::string or_none(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "none";
}

}  // namespace detail

inline CommandOutput analyze(const UndirectedGraph& g) {
  const auto report = analyze_separability(g);
  CommandOutput out;
  out.document = separability_json(g, report);
  std::ostringstream text;
  text << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count() << "\n"
       << "so = " << report.so.to_string() << "  d = " << report.d << "  d2 = " << report.d2 << "\n"
       << "components: " << connected_components(g).size() << "\n";
  for (const auto& p : report.pair_orders) {
    text << "  so(" << g.label(p.a) << ", " << g.label(p.b) << ") = " << p.order << "\n";
  }
  if (report.witness) {
    text << "witness: (" << g.label(report.witness->a) << ", " << g.label(report.witness->b) << ") separated by {";
    for (std::size_t i = 0; i < report.witness->separator.size(); ++i) {
      text << (i ? " " : "") << g.label(report.witness->separator[i]);
    }
    text << "}\n";
  }
  out.text = text.str();
  return out;
}

/// Exact-oracle k-graph sequence for a ground-truth graph, with the nesting
/// verdict and the first k at which G_k equals the graph.
inline CommandOutput ksequence(const UndirectedGraph& g, std::optional<std::size_t> max_k = std::nullopt) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw DomainError("ksequence needs at least 2 vertices");
  const std::size_t top = max_k.value_or(n - 2);
  GraphOracle oracle(g);
  const auto sequence = k_graph_sequence(oracle, top);
  const auto so = separability_order(g);

  auto subset = [](const UndirectedGraph& small, const UndirectedGraph& big) {
    for (const auto& [a, b] : small.edges()) {
      if (!big.adjacent(a, b)) return false;
    }
    return true;
  };
  const auto& steps = sequence.steps;
  bool nested = true;
  for (std::size_t j = 1; j < steps.size(); ++j) {
    for (std::size_t k = j; k < steps.size(); ++k) nested = nested && subset(steps[k].graph, steps[j].graph);
  }
  nlohmann::json e1_in_e0 = nullptr;
  if (steps.size() > 1) e1_in_e0 = subset(steps[1].graph, steps[0].graph);
  std::optional<std::size_t> first_recovery;
  for (const auto& step : steps) {
    if (step.graph == g) {
      first_recovery = step.k;
      break;
    }
  }
  const bool within_range = so.is_infinite() ? true : so.value() <= top;
  const bool recovery_ok = !within_range || (first_recovery && so >= *first_recovery);

  CommandOutput out;
  auto& doc = out.document;
  doc["vertices"] = g.labels();
  doc["so"] = order_json(so);
  doc["max_k"] = top;
  doc["steps"] = nlohmann::json::array();
  for (const auto& step : steps) {
    doc["steps"].push_back(
        {{"k", step.k}, {"edge_count", step.graph.edge_count()}, {"d2", step.d2}, {"edges", edges_json(step.graph)}});
  }
  doc["nested"] = nested;
  doc["nesting"] = nested ? "PASS" : "FAIL";
  doc["e1_subset_e0"] = e1_in_e0;
  doc["first_recovery_k"] = optional_json(first_recovery);
  doc["recovery_within_so"] = recovery_ok;
  doc["query_count"] = oracle.query_count();
  out.exit_code = nested && recovery_ok ? kSuccess : kPropertyFailure;

  std::ostringstream text;
  text << "so = " << so.to_string() << "\n";
  for (const auto& step : steps) {
    text << "k = " << step.k << ": " << step.graph.edge_count() << " edges, d2 = " << step.d2 << "\n";
  }
  text << "nesting: " << (nested ? "PASS" : "FAIL") << "\n"
       << "first k with G_k = G: " << detail::or_none(first_recovery) << "\n";
  out.text = text.str();
  return out;
}

struct SimulateConfig {
  std::size_t vertices = 6;
  double edge_prob = 0.4;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  TestConfig test;
};

inline nlohmann::json run_summary(const UndirectedGraph& truth, const LearnReport& r) {
  const auto shd = structural_hamming_distance(truth, r.result);
  return {{"stopped_at", optional_json(r.stopped_at)},
          {"certificate", optional_json(r.certificate)},
          {"shd", shd},
          {"recovered", shd == 0},
          {"query_count", r.query_count},
          {"warnings", r.warnings},
          {"result_edges", edges_json(r.result)}};
}

/// Random graph -> audited Gaussian model -> learn with the population
/// oracle, and with the Fisher-z oracle when a sample size is given.
inline CommandOutput simulate(const SimulateConfig& config) {
  if (config.vertices < 3) throw DomainError("--vertices must be at least 3");
  if (!(config.edge_prob >= 0.0 && config.edge_prob <= 1.0)) throw DomainError("--edge-prob must lie in [0, 1]");
  config.test.validate();

  std::mt19937_64 rng(config.seed);
  const auto truth = random_graph(config.vertices, config.edge_prob, rng);
  GenerationOptions generation;
  generation.seed = rng();
  const std::uint64_t sample_seed = rng();
  const auto model = generate_faithful_model(truth, generation);

  CommandOutput out;
  auto& doc = out.document;
  doc["vertices"] = config.vertices;
  doc["edge_prob"] = config.edge_prob;
  doc["seed"] = config.seed;
  doc["graph"] = {{"vertices", truth.labels()}, {"edges", edges_json(truth)}};
  doc["so"] = order_json(separability_order(truth));
  doc["d2"] = degree_two(truth);

  GaussianOracle population(model, config.test);
  const auto exact = learn_with_stopping(population);
  doc["population"] = run_summary(truth, exact);
  doc["population"]["epsilon"] = config.test.epsilon;

  std::ostringstream text;
  text << "true graph:" << detail::join_edges(truth) << "\n"
       << "population: stopped_at = " << detail::or_none(exact.stopped_at)
       << ", shd = " << structural_hamming_distance(truth, exact.result) << ", queries = " << exact.query_count
       << "\n";

  if (config.samples) {
    const auto data = sample(model, *config.samples, sample_seed);
    FisherZOracle statistical(truth.labels(), data, config.test);
    LearnOptions options;
    // keep every query above the n > |S| + 3 floor
    if (*config.samples <= config.vertices + 1) {
      if (*config.samples < 5) throw DomainError("--samples too small for any conditioning order");
      options.max_k = *config.samples - 4;
    }
    const auto learned = learn_with_stopping(statistical, options);
    doc["sample"] = run_summary(truth, learned);
    doc["sample"]["samples"] = *config.samples;
    doc["sample"]["significance"] = config.test.significance;
    text << "sample (n = " << *config.samples << "): stopped_at = " << detail::or_none(learned.stopped_at)
         << ", shd = " << structural_hamming_distance(truth, learned.result)
         << ", queries = " << learned.query_count << "\n";
  }
  out.text = text.str();
  return out;
}

struct LearnConfig {
  TestConfig test;
  std::optional<std::size_t> max_k;
  bool neighbors_only = false;
  std::uint64_t max_queries = 10'000'000;
};

/// Fisher-z learning with the stopping rule on a labelled data set.
inline CommandOutput learn(const DataSet& data, const LearnConfig& config) {
  const std::size_t p = data.labels.size();
  const auto n = static_cast<std::size_t>(data.values.rows());
  if (p < 2) throw DomainError("learning needs at least 2 columns (got " + std::to_string(p) + ")");
  // two columns admit only the marginal slot k = 0; the stopping rule needs three
  const std::size_t top = p == 2 ? 0 : config.max_k.value_or(p - 2);
  if (p == 2 && config.max_k.value_or(0) != 0) throw DomainError("max_k must be 0 with 2 columns");
  if (n <= top + 3) {
    throw DomainError("insufficient samples: n = " + std::to_string(n) + " must exceed max_k + 3 = " +
                      std::to_string(top + 3));
  }
  for (std::size_t j = 0; j < p; ++j) {
    const auto column = data.values.col(static_cast<Eigen::Index>(j));
    if (!column.allFinite()) throw DomainError("column '" + data.labels[j] + "' has non-finite values");
    if ((column.array() == column(0)).all()) {
      throw DomainError("column '" + data.labels[j] + "' is constant");
    }
  }
  FisherZOracle oracle(data.labels, data.values, config.test);
  LearnOptions options;
  options.max_k = top;
  options.neighbors_only = config.neighbors_only;
  options.max_queries = config.max_queries;
  LearnReport report;
  if (p == 2) {
    report.sequence = k_graph_sequence(oracle, 0, options);
    const auto& steps = report.sequence.steps;
    report.result = steps.empty() ? UndirectedGraph(data.labels, {{0, 1}}) : steps[0].graph;
    report.query_count = oracle.query_count();
    report.warnings.emplace_back("stopping rule needs at least 3 vertices; result is the k = 0 graph");
  } else {
    report = learn_with_stopping(oracle, options);
  }

  CommandOutput out;
  out.document = learn_json(report);
  out.document["samples"] = n;
  out.document["significance"] = config.test.significance;
  std::ostringstream text;
  for (const auto& step : report.sequence.steps) {
    text << "k = " << step.k << ": " << step.graph.edge_count() << " edges, d2 = " << step.d2 << "\n";
  }
  text << "stopped_at = " << detail::or_none(report.stopped_at) << "\n"
       << "result:" << detail::join_edges(report.result) << "\n";
  for (const auto& w : report.warnings) text << "warning: " << w << "\n";
  out.text = text.str();
  return out;
}

inline CommandOutput verify(const VerifyOptions& options) {
  const auto report = run_verification(options);
  CommandOutput out;
  auto& doc = out.document;
  doc["passed"] = report.passed();
  doc["verdict"] = report.passed() ? "PASS" : "FAIL";
  doc["graphs_checked"] = report.graphs_checked;
  doc["vertices"] = options.vertices;
  doc["trials"] = options.trials;
  doc["seed"] = options.seed;
  doc["mutant"] = options.inject_mutant;
  doc["properties"] = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& p : report.properties) {
    doc["properties"].push_back({{"name", p.name},
                                 {"checked", p.checked},
                                 {"violations", p.violations},
                                 {"counterexample", optional_json(p.counterexample)}});
    text << (p.violations ? "FAIL " : "PASS ") << p.name << " (" << p.checked << " checks, " << p.violations
         << " violations)\n";
    if (p.counterexample) text << *p.counterexample;
  }
  text << (report.passed() ? "PASS" : "FAIL") << ": " << report.graphs_checked << " graphs\n";
  out.text = text.str();
  out.exit_code = report.passed() ? kSuccess : kPropertyFailure;
  return out;
}

}  // namespace lowcond::cli
