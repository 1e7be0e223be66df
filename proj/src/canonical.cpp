// AHU-style canonical encoding of unrooted trees.
//
// Rooted at the centroid, every subtree gets a rank such that two subtrees
// share a rank iff they are isomorphic, and ranks respect a total order on
// isomorphism classes that does not depend on the surrounding tree: first by
// subtree height, then lexicographically by the sorted ranks of the children.
// Emitting the bracket string with children visited in rank order then gives
// a canonical form in O(n log n), without building one string per subtree.

#include <algorithm>
#include <string>
#include <vector>

#include "wix/tree.hpp"

namespace wix {
namespace {

std::string rooted_code(const RootedTree& rt) {
  const std::size_t n = rt.vertex_count();
  std::vector<std::size_t> depth(n, 0);  // height of the subtree below v
  auto order = rt.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v != rt.root()) {
      const Vertex p = rt.parent(v);
      depth[p] = std::max(depth[p], depth[v] + 1);
    }
  }
  const std::size_t max_depth = depth[rt.root()];
  std::vector<std::vector<Vertex>> by_depth(max_depth + 1);
  for (Vertex v = 0; v < n; ++v) by_depth[depth[v]].push_back(v);

  std::vector<std::size_t> rank(n, 0);
  std::vector<std::vector<std::size_t>> key(n);
  std::size_t next_rank = 0;
  for (auto& group : by_depth) {
    for (Vertex v : group) {
      for (Vertex c : rt.children(v)) key[v].push_back(rank[c]);
      std::sort(key[v].begin(), key[v].end());
    }
    std::sort(group.begin(), group.end(),
              [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0 && key[group[i]] != key[group[i - 1]]) ++next_rank;
      rank[group[i]] = next_rank;
    }
    ++next_rank;
  }

  std::vector<std::vector<Vertex>> sorted_children(n);
  for (Vertex v = 0; v < n; ++v) {
    auto kids = rt.children(v);
    sorted_children[v].assign(kids.begin(), kids.end());
    std::sort(sorted_children[v].begin(), sorted_children[v].end(),
              [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }

  std::string code;
  code.reserve(2 * n);
  // (vertex, next child index)
  std::vector<std::pair<Vertex, std::size_t>> stack{{rt.root(), 0}};
  code.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < sorted_children[v].size()) {
      const Vertex c = sorted_children[v][next++];
      code.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      code.push_back(')');
      stack.pop_back();
    }
  }
  return code;
}

}  // namespace

std::string canonical_code(const Tree& t) {
  const std::vector<Vertex> centers = centroid(t);
  std::string best = rooted_code(RootedTree(t, centers.front()));
  if (centers.size() == 2) best = std::min(best, rooted_code(RootedTree(t, centers.back())));
  return best;
}

}  // namespace wix
