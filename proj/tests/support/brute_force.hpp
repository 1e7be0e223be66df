// Slow, obviously-correct reference implementations for tests. Nothing here
// shares code with the library beyond the Tree container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "wix/tree.hpp"

namespace wix::testing {

inline std::vector<std::vector<std::uint64_t>> floyd_warshall(const Tree& t) {
  const std::size_t n = t.vertex_count();
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : t.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline std::uint64_t brute_wiener(const Tree& t) {
  const auto d = floyd_warshall(t);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) sum += d[i][j];
  }
  return sum;
}

// Backtracking search for an explicit vertex bijection preserving degrees
// and adjacency. Exponential in the worst case; meant for tiny trees.
inline bool brute_isomorphic(const Tree& a, const Tree& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  constexpr Vertex kFree = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> to_b(n, kFree), to_a(n, kFree);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (to_a[w] != kFree || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(to_b[u], w);
      if (!ok) continue;
      to_b[v] = w;
      to_a[w] = v;
      if (self(self, v + 1)) return true;
      to_b[v] = to_a[w] = kFree;
    }
    return false;
  };
  return extend(extend, 0);
}

inline Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Tree::from_edges(n, edges);
}

inline Tree star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Tree::from_edges(n, edges);
}

inline std::vector<int> degree_multiset(const Tree& t) {
  std::vector<int> out;
  for (Vertex v = 0; v < t.vertex_count(); ++v) out.push_back(static_cast<int>(t.degree(v)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wix::testing
