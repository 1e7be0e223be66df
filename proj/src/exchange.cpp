#include "wix/exchange.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "wix/error.hpp"

namespace wix {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kTailSwap: return "tail_swap";
    case MoveKind::kComponentSwap: return "component_swap";
    case MoveKind::kBranchMove: return "branch_move";
  }
  return "unknown";
}

namespace {

WienerDelta weight(const PathDecomposition& d, std::size_t i) {
  const auto w = static_cast<WienerDelta>(2 * i);
  return d.has_center() ? w : w - 1;
}

WienerDelta signed_size(std::size_t s) { return static_cast<WienerDelta>(s); }

// sum_{i=1}^{k} w(i) (|X_i| - |Y_i|)
WienerDelta weighted_imbalance(const PathDecomposition& d, std::size_t k) {
  WienerDelta sum = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    sum += weight(d, i) * (signed_size(d.x_size(i)) - signed_size(d.y_size(i)));
  }
  return sum;
}

void check_index(const PathDecomposition& d, std::size_t k, std::size_t upper) {
  if (k < 1 || k > upper) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "k = " + std::to_string(k) + " with arm length " + std::to_string(d.arm_length()));
  }
}

}  // namespace

WienerDelta predict_tail_swap_delta(const PathDecomposition& d, std::size_t k) {
  check_index(d, k, d.arm_length() == 0 ? 0 : d.arm_length() - 1);
  const WienerDelta tails = signed_size(d.x_tail_size(k)) - signed_size(d.y_tail_size(k));
  return weighted_imbalance(d, k) * tails;
}

WienerDelta predict_component_swap_delta(const PathDecomposition& d, std::size_t k) {
  check_index(d, k, d.arm_length());
  const WienerDelta tails = signed_size(d.x_tail_size(k)) - signed_size(d.y_tail_size(k));
  const WienerDelta swapped = signed_size(d.x_size(k)) - signed_size(d.y_size(k));
  return (weighted_imbalance(d, k - 1) + weight(d, k) * tails) * swapped;
}

WienerDelta predict_branch_move_delta(const PathDecomposition& d, std::size_t k,
                                      std::span<const std::size_t> branch_sizes) {
  check_index(d, k, d.arm_length());
  std::vector<std::size_t> available;
  for (const Branch& b : d.y_branches(k)) available.push_back(b.size);
  std::vector<std::size_t> wanted(branch_sizes.begin(), branch_sizes.end());
  std::sort(available.begin(), available.end());
  std::sort(wanted.begin(), wanted.end());
  if (!std::includes(available.begin(), available.end(), wanted.begin(), wanted.end())) {
    throw Error(ErrorCode::kInvalidBranchSelection,
                "branch sizes are not a selection of the branches at y_" + std::to_string(k));
  }

  WienerDelta moved = 0;
  for (std::size_t s : wanted) moved += signed_size(s);
  const WienerDelta beyond = signed_size(d.y_tail_size(k - 1)) - moved -
                             signed_size(d.x_tail_size(k - 1));
  return (-weighted_imbalance(d, k - 1) + weight(d, k) * beyond) * moved;
}

ExchangeMove make_tail_swap(const PathDecomposition& d, std::size_t k) {
  ExchangeMove m{MoveKind::kTailSwap, k, {}, d, 0};
  m.predicted_delta = predict_tail_swap_delta(d, k);
  return m;
}

ExchangeMove make_component_swap(const PathDecomposition& d, std::size_t k) {
  ExchangeMove m{MoveKind::kComponentSwap, k, {}, d, 0};
  m.predicted_delta = predict_component_swap_delta(d, k);
  return m;
}

ExchangeMove make_branch_move(const PathDecomposition& d, std::size_t k,
                              std::vector<Vertex> branch_roots) {
  check_index(d, k, d.arm_length());
  if (d.y_degree(k) <= d.x_degree(k)) {
    throw Error(ErrorCode::kInvalidMove, "branch move needs d(y_k) > d(x_k)");
  }
  const std::size_t needed = d.y_degree(k) - d.x_degree(k);
  std::sort(branch_roots.begin(), branch_roots.end());
  if (branch_roots.size() != needed ||
      std::adjacent_find(branch_roots.begin(), branch_roots.end()) != branch_roots.end()) {
    throw Error(ErrorCode::kInvalidBranchSelection,
                "need " + std::to_string(needed) + " distinct branches");
  }
  std::vector<std::size_t> sizes;
  for (Vertex r : branch_roots) {
    auto branches = d.y_branches(k);
    auto it = std::find_if(branches.begin(), branches.end(),
                           [r](const Branch& b) { return b.root == r; });
    if (it == branches.end()) {
      throw Error(ErrorCode::kInvalidBranchSelection,
                  "vertex " + std::to_string(r) + " does not root a branch at y_" +
                      std::to_string(k));
    }
    sizes.push_back(it->size);
  }
  ExchangeMove m{MoveKind::kBranchMove, k, std::move(branch_roots), d, 0};
  m.predicted_delta = predict_branch_move_delta(d, k, sizes);
  return m;
}

std::vector<ExchangeMove> enumerate_moves(const PathDecomposition& d) {
  std::vector<ExchangeMove> moves;
  const std::size_t p = d.arm_length();
  for (std::size_t k = 1; k < p; ++k) moves.push_back(make_tail_swap(d, k));
  for (std::size_t k = 1; k <= p; ++k) moves.push_back(make_component_swap(d, k));
  for (const PathDecomposition& side : {d, d.mirrored()}) {
    for (std::size_t k = 1; k <= p; ++k) {
      if (side.y_degree(k) <= side.x_degree(k)) continue;
      std::vector<Branch> branches(side.y_branches(k).begin(), side.y_branches(k).end());
      std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
        return a.size != b.size ? a.size < b.size : a.root < b.root;
      });
      std::vector<Vertex> roots;
      for (std::size_t i = 0; i < side.y_degree(k) - side.x_degree(k); ++i) {
        roots.push_back(branches[i].root);
      }
      moves.push_back(make_branch_move(side, k, std::move(roots)));
    }
  }
  return moves;
}

Tree apply_move(const Tree& t, const ExchangeMove& m) {
  const PathDecomposition& d = m.decomposition;
  if (d.vertex_count() != t.vertex_count()) {
    throw Error(ErrorCode::kInvalidMove, "decomposition is for a different vertex count");
  }
  // The decomposition must describe t: same path, same component sizes.
  {
    PathDecomposition fresh = [&] {
      try {
        return path_decompose(t, d.path(), d.has_center());
      } catch (const Error& e) {
        throw Error(ErrorCode::kInvalidMove, e.what());
      }
    }();
    std::unordered_map<Vertex, std::size_t> size_of;
    for (std::size_t i = 1; i <= fresh.arm_length(); ++i) {
      size_of[fresh.x(i)] = fresh.x_size(i);
      size_of[fresh.y(i)] = fresh.y_size(i);
    }
    for (std::size_t i = 1; i <= d.arm_length(); ++i) {
      if (size_of[d.x(i)] != d.x_size(i) || size_of[d.y(i)] != d.y_size(i)) {
        throw Error(ErrorCode::kInvalidMove, "decomposition does not match the tree");
      }
    }
  }

  const std::size_t p = d.arm_length();
  std::vector<Vertex> right, left;
  for (std::size_t i = 1; i <= p; ++i) {
    right.push_back(d.x(i));
    left.push_back(d.y(i));
  }

  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  auto drop = [&edges](Vertex a, Vertex b) {
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw Error(ErrorCode::kInvalidMove, "missing edge");
    edges.erase(it);
  };

  switch (m.kind) {
    case MoveKind::kTailSwap:
      if (m.k < 1 || m.k >= p) throw Error(ErrorCode::kInvalidMove, "tail swap index");
      for (std::size_t i = m.k; i < p; ++i) std::swap(right[i], left[i]);
      break;
    case MoveKind::kComponentSwap:
      if (m.k < 1 || m.k > p) throw Error(ErrorCode::kInvalidMove, "component swap index");
      std::swap(right[m.k - 1], left[m.k - 1]);
      break;
    case MoveKind::kBranchMove: {
      if (m.k < 1 || m.k > p) throw Error(ErrorCode::kInvalidMove, "branch move index");
      for (Vertex r : m.branches) {
        drop(d.y(m.k), r);
        edges.push_back({d.x(m.k), r});
      }
      return tree_from_edges(t.vertex_count(), edges);
    }
  }

  const auto path = d.path();
  for (std::size_t i = 0; i + 1 < path.size(); ++i) drop(path[i], path[i + 1]);
  std::vector<Vertex> sequence(left.rbegin(), left.rend());
  if (d.center()) sequence.push_back(*d.center());
  sequence.insert(sequence.end(), right.begin(), right.end());
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    edges.push_back({sequence[i], sequence[i + 1]});
  }
  return tree_from_edges(t.vertex_count(), edges);
}

}  // namespace wix
