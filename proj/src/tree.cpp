#include "wix/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "wix/error.hpp"

namespace wix {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInvalidDegreeSequence: return "InvalidDegreeSequence";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kBadParity: return "BadParity";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidBranchSelection: return "InvalidBranchSelection";
    case ErrorCode::kInvalidMove: return "InvalidMove";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kTheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// DegreeSequence

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::size_t excess = 0;  // sum of (d - 1) = n - 2
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const int d = degrees_[i];
    if (d < 2) {
      throw Error(ErrorCode::kInvalidDegreeSequence,
                  "internal degree " + std::to_string(d) + " is below 2");
    }
    if (i > 0 && d > degrees_[i - 1]) {
      throw Error(ErrorCode::kInvalidDegreeSequence, "degrees must be non-increasing");
    }
    if (static_cast<std::size_t>(d) > kMaxVertices) {
      throw Error(ErrorCode::kInvalidDegreeSequence, "degree exceeds the vertex cap");
    }
    excess += static_cast<std::size_t>(d) - 1;
    if (excess + 2 > kMaxVertices) {
      throw Error(ErrorCode::kInvalidDegreeSequence,
                  "tree would exceed " + std::to_string(kMaxVertices) + " vertices");
    }
  }
  vertex_count_ = excess + 2;
  leaf_count_ = vertex_count_ - degrees_.size();
}

DegreeSequence DegreeSequence::from_unsorted(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return DegreeSequence(std::move(degrees));
}

DegreeSequence DegreeSequence::single_vertex() {
  DegreeSequence ds;
  ds.vertex_count_ = 1;
  ds.leaf_count_ = 0;
  return ds;
}

std::string DegreeSequence::to_string() const {
  if (vertex_count_ == 1) return "{n=1}";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) os << ',';
    os << degrees_[i];
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Tree

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "a tree needs at least one vertex");
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kTooLarge, "n = " + std::to_string(n) + " exceeds the vertex cap");
  }

  Tree t;
  t.n_ = n;
  t.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n = " +
                      std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, "at vertex " + std::to_string(e.u));
    t.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  if (auto dup = std::adjacent_find(t.edges_.begin(), t.edges_.end()); dup != t.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "(" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }

  DisjointSets sets(n);
  for (const Edge& e : t.edges_) {
    if (!sets.unite(e.u, e.v)) {
      throw Error(ErrorCode::kCycleDetected,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") closes a cycle");
    }
  }
  if (t.edges_.size() != n - 1) {
    throw Error(ErrorCode::kDisconnected, std::to_string(n - t.edges_.size()) + " components");
  }

  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : t.edges_) {
    ++t.offsets_[e.u + 1];
    ++t.offsets_[e.v + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.targets_.resize(2 * t.edges_.size());
  std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : t.edges_) t.targets_[cursor[e.u]++] = e.v;
  for (const Edge& e : t.edges_) t.targets_[cursor[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(t.targets_.begin() + t.offsets_[v], t.targets_.begin() + t.offsets_[v + 1]);
  }
  return t;
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  if (v >= n_) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Tree::degree(Vertex v) const { return neighbors(v).size(); }

bool Tree::has_edge(Vertex a, Vertex b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Tree tree_from_edges(std::size_t n, std::span<const Edge> edges) {
  return Tree::from_edges(n, edges);
}

Tree tree_from_edges(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n = " +
                      std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Tree::from_edges(n, edges);
}

DegreeSequence degree_sequence_of(const Tree& t) {
  if (t.vertex_count() == 1) return DegreeSequence::single_vertex();
  std::vector<int> degrees;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) >= 2) degrees.push_back(static_cast<int>(t.degree(v)));
  }
  return DegreeSequence::from_unsorted(std::move(degrees));
}

// ---------------------------------------------------------------------------
// RootedTree

RootedTree::RootedTree(Tree tree, Vertex root) : tree_(std::move(tree)), root_(root) {
  const std::size_t n = tree_.vertex_count();
  if (root >= n) throw Error(ErrorCode::kVertexOutOfRange, "root " + std::to_string(root));

  parent_.assign(n, kNoVertex);
  height_.assign(n, 0);
  subtree_size_.assign(n, 1);
  order_.reserve(n);
  order_.push_back(root);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    for (Vertex w : tree_.neighbors(v)) {
      if (w == parent_[v]) continue;
      parent_[w] = v;
      height_[w] = height_[v] + 1;
      order_.push_back(w);
    }
  }
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    if (*it != root_) subtree_size_[parent_[*it]] += subtree_size_[*it];
  }

  // Children in BFS order; since BFS visits neighbors in id order, each
  // child list is sorted by id.
  child_offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v != root_) ++child_offsets_[parent_[v] + 1];
  }
  std::partial_sum(child_offsets_.begin(), child_offsets_.end(), child_offsets_.begin());
  child_targets_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> cursor(child_offsets_.begin(), child_offsets_.end() - 1);
  for (Vertex v : order_) {
    if (v != root_) child_targets_[cursor[parent_[v]]++] = v;
  }
}

std::span<const Vertex> RootedTree::children(Vertex v) const {
  if (v >= vertex_count()) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
  return {child_targets_.data() + child_offsets_[v], child_offsets_[v + 1] - child_offsets_[v]};
}

RootedTree root_at(const Tree& t, Vertex r) { return RootedTree(t, r); }

// ---------------------------------------------------------------------------
// Distances

std::vector<std::size_t> distances_from(const Tree& t, Vertex v) {
  const std::size_t n = t.vertex_count();
  if (v >= n) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[v] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex a = queue[head];
    for (Vertex b : t.neighbors(a)) {
      if (dist[b] != kUnseen) continue;
      dist[b] = dist[a] + 1;
      queue.push_back(b);
    }
  }
  return dist;
}

WienerValue distance_of(const Tree& t, Vertex v) {
  WienerValue total = 0;
  for (std::size_t d : distances_from(t, v)) total += d;
  return total;
}

std::vector<Vertex> centroid(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n == 1) return {0};
  // g(child) = g(parent) + n - 2 * |T(child)|, so g is obtained for all
  // vertices from one rooted pass.
  const RootedTree rt(t, 0);
  std::vector<WienerValue> g(n, 0);
  g[0] = distance_of(t, 0);
  for (Vertex v : rt.order()) {
    if (v == 0) continue;
    g[v] = g[rt.parent(v)] + n - 2 * rt.subtree_size(v);
  }
  const WienerValue best = *std::min_element(g.begin(), g.end());
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (g[v] == best) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> tree_path(const Tree& t, Vertex a, Vertex b) {
  const RootedTree rt(t, b);
  if (a >= t.vertex_count()) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(a));
  std::vector<Vertex> path{a};
  while (path.back() != b) path.push_back(rt.parent(path.back()));
  return path;
}

std::vector<Vertex> leaves(const Tree& t) {
  std::vector<Vertex> result;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) == 1) result.push_back(v);
  }
  return result;
}

}  // namespace wix
