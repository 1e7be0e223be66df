#include "wix/constructors.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wix/error.hpp"

namespace wix {

RootedTree build_greedy_tree(const DegreeSequence& ds) {
  const std::size_t n = ds.vertex_count();
  if (n == 1) return RootedTree(Tree(), 0);
  if (n == 2) return RootedTree(tree_from_edges(2, std::vector<Edge>{{0, 1}}), 0);

  const auto& degrees = ds.degrees();
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<int> degree_of{degrees.front()};
  std::size_t next_degree = 1;
  // Vertex ids are handed out in creation order, which is also the processing
  // order, so the queue is the id range itself.
  for (Vertex v = 0; v < degree_of.size(); ++v) {
    const int slots = v == 0 ? degree_of[v] : degree_of[v] - 1;
    for (int s = 0; s < slots; ++s) {
      const auto child = static_cast<Vertex>(degree_of.size());
      degree_of.push_back(next_degree < degrees.size() ? degrees[next_degree++] : 1);
      edges.push_back({v, child});
    }
  }
  if (degree_of.size() != n) {
    throw Error(ErrorCode::kInvalidDegreeSequence,
                "construction produced " + std::to_string(degree_of.size()) + " vertices, expected " +
                    std::to_string(n));
  }
  return RootedTree(tree_from_edges(n, edges), 0);
}

LevelProfile level_profile(const RootedTree& rt) {
  LevelProfile profile;
  for (Vertex v : rt.order()) {
    const std::size_t h = rt.height(v);
    if (profile.levels.size() <= h) profile.levels.resize(h + 1);
    profile.levels[h].push_back(static_cast<int>(rt.tree().degree(v)));
  }
  return profile;
}

Tree build_greedy_caterpillar(const DegreeSequence& ds) {
  const std::size_t n = ds.vertex_count();
  if (n == 1) return Tree();
  if (n == 2) return tree_from_edges(2, std::vector<Edge>{{0, 1}});

  const auto& degrees = ds.degrees();
  const std::size_t k = degrees.size();
  std::vector<int> spine_degree(k);
  // Deal v_1, v_k, v_2, v_{k-1}, ... in that order.
  std::size_t lo = 0, hi = k - 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (i % 2 == 0) {
      spine_degree[lo++] = degrees[i];
    } else {
      spine_degree[hi--] = degrees[i];
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  auto next = static_cast<Vertex>(k);
  for (Vertex i = 0; i < k; ++i) {
    const int spine_neighbors = k == 1 ? 0 : (i == 0 || i + 1 == k ? 1 : 2);
    for (int p = 0; p < spine_degree[i] - spine_neighbors; ++p) edges.push_back({i, next++});
  }
  return tree_from_edges(n, edges);
}

std::optional<std::vector<Vertex>> caterpillar_spine(const Tree& t) {
  const std::size_t n = t.vertex_count();
  std::vector<char> internal(n, 0);
  std::size_t internal_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) >= 2) {
      internal[v] = 1;
      ++internal_count;
    }
  }
  if (internal_count == 0) return std::vector<Vertex>{};

  // Deleting the leaves of a tree leaves a tree, so it is a path exactly when
  // no internal vertex has three internal neighbors.
  Vertex end = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (!internal[v]) continue;
    std::size_t inner = 0;
    for (Vertex w : t.neighbors(v)) inner += internal[w];
    if (inner > 2) return std::nullopt;
    if (inner <= 1 && end == kNoVertex) end = v;
  }

  std::vector<Vertex> spine{end};
  Vertex prev = kNoVertex;
  while (true) {
    Vertex step = kNoVertex;
    for (Vertex w : t.neighbors(spine.back())) {
      if (internal[w] && w != prev) step = w;
    }
    if (step == kNoVertex) break;
    prev = spine.back();
    spine.push_back(step);
  }
  return spine;
}

namespace {

bool dealt_from_ends(const std::vector<std::size_t>& d) {
  if (d.empty()) return true;
  std::size_t lo = 0, hi = d.size() - 1;
  std::size_t previous = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::size_t current = i % 2 == 0 ? d[lo++] : d[hi--];
    if (current > previous) return false;
    previous = current;
  }
  return true;
}

}  // namespace

bool check_caterpillar(const Tree& t) {
  const auto spine = caterpillar_spine(t);
  if (!spine) return false;
  std::vector<std::size_t> d;
  for (Vertex v : *spine) d.push_back(t.degree(v));
  if (dealt_from_ends(d)) return true;
  std::reverse(d.begin(), d.end());
  return dealt_from_ends(d);
}

}  // namespace wix
