#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wix/path_decomposition.hpp"
#include "wix/tree.hpp"

namespace wix {

enum class MoveKind {
  /// Exchange the outer tails X_{>k} and Y_{>k}.
  kTailSwap,
  /// Exchange the components X_k and Y_k.
  kComponentSwap,
  /// Detach d(y_k) - d(x_k) branches from y_k and hang them from x_k.
  kBranchMove,
};

std::string_view to_string(MoveKind kind);

struct ExchangeMove {
  MoveKind kind = MoveKind::kTailSwap;
  std::size_t k = 1;
  /// Roots of the moved branches (kBranchMove only).
  std::vector<Vertex> branches;
  PathDecomposition decomposition;
  WienerDelta predicted_delta = 0;
};

// Closed-form changes in the Wiener index. Positions along the path are
// weighted by 2i - 1 without a center and 2i with one.

/// Errors: kIndexOutOfRange unless 1 <= k < arm_length().
WienerDelta predict_tail_swap_delta(const PathDecomposition& d, std::size_t k);

/// Errors: kIndexOutOfRange unless 1 <= k <= arm_length().
WienerDelta predict_component_swap_delta(const PathDecomposition& d, std::size_t k);

/// branch_sizes must be a sub-multiset of the sizes of the branches hanging
/// off y_k. Errors: kIndexOutOfRange, kInvalidBranchSelection.
WienerDelta predict_branch_move_delta(const PathDecomposition& d, std::size_t k,
                                      std::span<const std::size_t> branch_sizes);

ExchangeMove make_tail_swap(const PathDecomposition& d, std::size_t k);
ExchangeMove make_component_swap(const PathDecomposition& d, std::size_t k);

/// Requires exactly d(y_k) - d(x_k) > 0 distinct branch roots hanging off y_k
/// so that the degree multiset is preserved. Errors: kIndexOutOfRange,
/// kInvalidBranchSelection, kInvalidMove.
ExchangeMove make_branch_move(const PathDecomposition& d, std::size_t k,
                              std::vector<Vertex> branch_roots);

/// Every degree-preserving move on d: tail swaps, component swaps, and branch
/// moves in both directions (smallest-total-size branch subset only).
std::vector<ExchangeMove> enumerate_moves(const PathDecomposition& d);

/// Errors: kInvalidMove when the move's decomposition does not describe t.
Tree apply_move(const Tree& t, const ExchangeMove& m);

/// Whether the path components interleave in size outward from the center:
/// non-increasing for kMin (|U_1| >= |W_1| >= |U_2| >= ...), non-decreasing
/// over all but the two end components for kMax. Orientation is free, and may
/// be flipped at any point where exchanging the tails (or the two components)
/// leaves the Wiener index unchanged.
bool check_size_interleaving(const PathDecomposition& d, Direction direction);

/// Whether, under some labeling accepted by check_size_interleaving(kMin), the
/// path vertex degrees are also non-increasing in the same interleaved order.
bool check_degree_interleaving(const PathDecomposition& d);

struct SearchResult {
  Tree tree;
  /// Wiener index after each applied move, starting with the input's.
  std::vector<WienerValue> trajectory;
  std::size_t moves = 0;
};

/// Steepest improvement per sampled maximal path. Each scan visits every leaf
/// in a seeded random order and decomposes the path to its farthest leaf; the
/// best strictly improving move on that path is applied and the scan restarts.
/// Stops once a full scan finds nothing. Every applied delta is checked against
/// a recomputation (kInconsistent on mismatch).
SearchResult local_search(const Tree& t, Direction direction, std::uint64_t seed);

}  // namespace wix
