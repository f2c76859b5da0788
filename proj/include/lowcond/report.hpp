#pragma once

// JSON shapes of the separability and learning reports. Vertices always
// appear by label; nlohmann::json keeps object keys sorted, so output is
// canonical.

#include "json.hpp"

#include "lowcond/graph.hpp"
#include "lowcond/learner.hpp"
#include "lowcond/separators.hpp"

namespace lowcond {

inline nlohmann::json labels_json(const UndirectedGraph& g, const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

inline nlohmann::json edges_json(const UndirectedGraph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) out.push_back({g.label(a), g.label(b)});
  return out;
}

/// Natural numbers as JSON numbers, infinity as the string "infinite".
inline nlohmann::json order_json(const SeparabilityOrder& so) {
  if (so.is_infinite()) return "infinite";
  return so.value();
}

inline nlohmann::json separability_json(const UndirectedGraph& g, const SeparabilityReport& r) {
  nlohmann::json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = edges_json(g);
  doc["so"] = order_json(r.so);
  doc["d"] = r.d;
  doc["d2"] = r.d2;
  doc["components"] = nlohmann::json::array();
  for (const auto& block : connected_components(g)) doc["components"].push_back(labels_json(g, block));
  doc["pairs"] = nlohmann::json::array();
  for (const auto& p : r.pair_orders) {
    doc["pairs"].push_back({{"a", g.label(p.a)}, {"b", g.label(p.b)}, {"order", p.order}});
  }
  if (r.witness) {
    doc["witness"] = {{"a", g.label(r.witness->a)},
                      {"b", g.label(r.witness->b)},
                      {"separator", labels_json(g, r.witness->separator)}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

inline nlohmann::json step_json(const KGraphStep& step) {
  const auto& g = step.graph;
  nlohmann::json deleted = nlohmann::json::array();
  for (const auto& w : step.witnesses) {
    deleted.push_back({{"a", g.label(w.a)}, {"b", g.label(w.b)}, {"given", labels_json(g, w.conditioning)}});
  }
  return {{"k", step.k},       {"edge_count", g.edge_count()}, {"d2", step.d2},
          {"queries", step.queries}, {"edges", edges_json(g)},    {"deleted", std::move(deleted)}};
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

inline nlohmann::json learn_json(const LearnReport& r) {
  nlohmann::json doc;
  doc["vertices"] = r.result.labels();
  doc["steps"] = nlohmann::json::array();
  for (const auto& step : r.sequence.steps) doc["steps"].push_back(step_json(step));
  doc["stopped_at"] = optional_json(r.stopped_at);
  doc["certificate"] = optional_json(r.certificate);
  doc["result"] = {{"edges", edges_json(r.result)}, {"edge_count", r.result.edge_count()}};
  doc["warnings"] = r.warnings;
  doc["query_count"] = r.query_count;
  doc["aborted"] = r.sequence.aborted;
  return doc;
}

}  // namespace lowcond
