#pragma once

// Edge-list text format:
//
//   vertices: 1 2 3 4 5     (optional, first significant line)
//   # comment
//   1 2
//   2 3
//
// Undeclared labels are added in order of first appearance. Duplicate edges
// (in either orientation) collapse; loops are rejected.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lowcond/errors.hpp"
#include "lowcond/graph.hpp"

namespace lowcond {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace detail

inline UndirectedGraph parse_graph(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string_view body = std::string_view(line).substr(first);

    if (body.starts_with("vertices:")) {
      if (seen_content) throw ParseError(line_no, "'vertices:' header must come first");
      seen_content = true;
      for (const auto& label : detail::split_ws(body.substr(9))) {
        if (index.contains(label)) {
          throw ParseError(line_no, "duplicate vertex label '" + label + "' in header");
        }
        intern(label);
      }
      continue;
    }
    seen_content = true;

    auto tokens = detail::split_ws(body);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected '<label> <label>', got '" + std::string(body) + "'");
    }
    if (tokens[0] == tokens[1]) {
      throw DomainError("line " + std::to_string(line_no) + ": loop edge on vertex '" +
                        tokens[0] + "'");
    }
    const Vertex a = intern(tokens[0]);
    const Vertex b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }
  return UndirectedGraph(std::move(labels), edges);
}

/// Canonical text: header with every label, then edges in index order.
inline std::string serialize_graph(const UndirectedGraph& g) {
  std::string out = "vertices:";
  for (const auto& label : g.labels()) out += " " + label;
  out += "\n";
  for (const auto& [a, b] : g.edges()) out += g.labels()[a] + " " + g.labels()[b] + "\n";
  return out;
}

inline UndirectedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace lowcond
