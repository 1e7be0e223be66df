#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wix/types.hpp"

namespace wix {

/// Degrees of the non-leaf vertices of a tree, sorted non-increasing.
///
/// The leaf count is implied: a tree with internal degrees d_1..d_k has
/// sum(d_i) - 2k + 2 leaves. The empty sequence denotes the single edge
/// (n = 2); the single vertex (n = 1) is built with single_vertex().
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Throws kInvalidDegreeSequence unless every entry is >= 2 and the list is
  /// non-increasing.
  explicit DegreeSequence(std::vector<int> degrees);

  /// Accepts any order; sorts descending before validating.
  static DegreeSequence from_unsorted(std::vector<int> degrees);
  static DegreeSequence single_vertex();

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t internal_count() const noexcept { return degrees_.size(); }
  std::size_t leaf_count() const noexcept { return leaf_count_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  /// "{4,4,3}"; "{}" for n = 2 and "{n=1}" for the single vertex.
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
  std::size_t leaf_count_ = 2;
  std::size_t vertex_count_ = 2;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// An undirected tree on vertices 0..n-1.
///
/// Edges are kept normalized (u < v) and sorted, so two Trees compare equal
/// exactly when they have the same labeled edge set.
class Tree {
 public:
  /// The single-vertex tree.
  Tree() = default;

  /// Validates and normalizes. Errors: kVertexOutOfRange, kSelfLoop,
  /// kDuplicateEdge, kCycleDetected, kDisconnected.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 1;
  std::vector<Edge> edges_;
  // CSR adjacency; neighbors of v are targets_[offsets_[v] .. offsets_[v+1]).
  std::vector<std::size_t> offsets_{0, 0};
  std::vector<Vertex> targets_;
};

Tree tree_from_edges(std::size_t n, std::span<const Edge> edges);
Tree tree_from_edges(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

DegreeSequence degree_sequence_of(const Tree& t);

/// A tree with a chosen root and the per-vertex data that rooting implies.
class RootedTree {
 public:
  RootedTree(Tree tree, Vertex root);

  const Tree& tree() const noexcept { return tree_; }
  Vertex root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return tree_.vertex_count(); }

  /// kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_.at(v); }
  std::size_t height(Vertex v) const { return height_.at(v); }
  std::size_t subtree_size(Vertex v) const { return subtree_size_.at(v); }
  std::span<const Vertex> children(Vertex v) const;

  /// Breadth-first order from the root.
  std::span<const Vertex> order() const noexcept { return order_; }

 private:
  Tree tree_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> subtree_size_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> child_offsets_;
  std::vector<Vertex> child_targets_;
};

/// Errors: kVertexOutOfRange.
RootedTree root_at(const Tree& t, Vertex r);

/// BFS distances (edge counts) from v to every vertex.
std::vector<std::size_t> distances_from(const Tree& t, Vertex v);

/// g_T(v): the sum of distances from v to all vertices.
WienerValue distance_of(const Tree& t, Vertex v);

/// The one or two (adjacent) vertices minimizing distance_of, sorted by id.
std::vector<Vertex> centroid(const Tree& t);

/// Equal iff the trees are isomorphic.
std::string canonical_code(const Tree& t);

/// Vertex sequence of the unique path from a to b, inclusive.
std::vector<Vertex> tree_path(const Tree& t, Vertex a, Vertex b);

std::vector<Vertex> leaves(const Tree& t);

}  // namespace wix
