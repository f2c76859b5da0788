#pragma once

#include <cstddef>
#include <vector>

#include "lowcond/graph.hpp"

namespace lowcond {

/// Visits every k-subset of `pool` in lexicographic order of positions.
/// `visit(const VertexSet&)` returns true to stop early; the function then
/// returns true as well.
template <typename Visitor>
bool for_each_subset_of_size(const std::vector<Vertex>& pool, std::size_t k, Visitor&& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<Vertex> members(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) members[i] = pool[pos[i]];
    if (visit(VertexSet(members))) return true;
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

/// V \ {a, b} in increasing order.
inline std::vector<Vertex> others(std::size_t vertex_count, Vertex a, Vertex b) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (v != a && v != b) pool.push_back(v);
  }
  return pool;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace lowcond
