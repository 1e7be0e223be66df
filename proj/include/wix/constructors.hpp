#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wix/tree.hpp"

namespace wix {

/// Degrees at each height of a greedy tree, in the order the construction
/// assigned them.
struct LevelProfile {
  std::vector<std::vector<int>> levels;
};

/// The Wiener minimizer for ds: breadth-first, handing out the largest
/// remaining degree to each new vertex, parents served in the order they were
/// created (which is also non-increasing degree order). Slots left once the
/// sequence is exhausted become leaves. Vertex ids follow creation order, so
/// the root is 0.
RootedTree build_greedy_tree(const DegreeSequence& ds);

LevelProfile level_profile(const RootedTree& rt);

struct GreedyCheck {
  bool ok = true;
  /// 1..5 for the first violated condition, 0 when ok.
  int condition = 0;
  Vertex first = kNoVertex;
  Vertex second = kNoVertex;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Structural characterization of greedy trees:
///   1. the root has maximum degree;
///   2. leaf heights differ by at most one;
///   3. a vertex strictly closer to the root has degree >= the other's;
///   4. for u, w at the same height with d(u) > d(w), every descendant of u is
///      at least as large in degree as every descendant of w at the same depth;
///   5. for such u, w with different parents, the same holds between the
///      siblings of u and the siblings of w and between their descendants.
GreedyCheck is_greedy_tree(const RootedTree& rt);

/// A spine v_1..v_k whose degrees are dealt alternately to the two ends
/// moving inward (v_1, v_k, v_2, v_{k-1}, ...), with pendant leaves to make
/// up each degree. Spine vertices are 0..k-1. This is not always the Wiener
/// maximizer: for {4,3,3,2} the spine order (4,2,3,3) gives 124 against 123.
Tree build_greedy_caterpillar(const DegreeSequence& ds);

/// Spine (internal vertices in path order) of a caterpillar, or nullopt when
/// the internal vertices do not induce a path.
std::optional<std::vector<Vertex>> caterpillar_spine(const Tree& t);

/// True iff t is a caterpillar whose spine degrees read
/// d(v_1) >= d(v_k) >= d(v_2) >= d(v_{k-1}) >= ... from one of its ends.
bool check_caterpillar(const Tree& t);

}  // namespace wix
