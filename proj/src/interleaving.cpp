// Size and degree interleaving along a path.
//
// Reading outward from the center, the chain is [z,] A_1, B_1, A_2, B_2, ...
// where (A_i, B_i) is either (X_i, Y_i) or (Y_i, X_i). The starting
// orientation is free. Later the orientation may change only where an
// exchange with zero Wiener change allows it:
//   - all of indices >= i flip when swapping the tails beyond i-1 costs 0;
//   - index i alone flips when swapping X_i and Y_i costs 0.
// The search walks these choices depth first, memoizing on the state that
// determines every later decision.

#include <limits>
#include <set>
#include <tuple>

#include "wix/exchange.hpp"

namespace wix {
namespace {

struct Element {
  std::size_t size;
  std::size_t degree;
};

class InterleavingSearch {
 public:
  InterleavingSearch(const PathDecomposition& d, Direction direction, bool with_degrees)
      : d_(d), direction_(direction), with_degrees_(with_degrees) {}

  bool run() {
    const std::size_t p = d_.arm_length();
    Element start{direction_ == Direction::kMin ? kInf : 0,
                  direction_ == Direction::kMin ? kInf : 0};
    if (d_.has_center()) {
      start = {d_.z_size(), d_.z_degree()};
      if (p == 0) return true;
    } else if (p == 0) {
      return true;
    }
    return visit(1, false, 0, start) || visit(1, true, 0, start);
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  Element arm(bool flipped, bool first, std::size_t i) const {
    const bool x_side = first != flipped;
    return x_side ? Element{d_.x_size(i), d_.x_degree(i)} : Element{d_.y_size(i), d_.y_degree(i)};
  }

  WienerDelta weight(std::size_t i) const {
    const auto w = static_cast<WienerDelta>(2 * i);
    return d_.has_center() ? w : w - 1;
  }

  // |A_{>k}| - |B_{>k}| under orientation `flipped` for every index > k.
  WienerDelta tail_gap(bool flipped, std::size_t k) const {
    const auto gap = static_cast<WienerDelta>(d_.x_tail_size(k)) -
                     static_cast<WienerDelta>(d_.y_tail_size(k));
    return flipped ? -gap : gap;
  }

  bool fits(const Element& prev, const Element& next, std::size_t i) const {
    if (direction_ == Direction::kMin) {
      if (next.size > prev.size) return false;
      return !with_degrees_ || next.degree <= prev.degree;
    }
    // The two end components are excluded from the non-decreasing chain.
    if (i == d_.arm_length()) return true;
    return next.size >= prev.size;
  }

  // `orientation` applies to index i and beyond; `imbalance` is
  // sum_{j<i} w(j) (|A_j| - |B_j|) for the labels chosen so far.
  bool visit(std::size_t i, bool orientation, WienerDelta imbalance, Element prev) {
    if (i > d_.arm_length()) return true;
    const auto key = std::make_tuple(i, orientation, imbalance, prev.size, prev.degree);
    if (!seen_.insert(key).second) return false;

    auto try_labels = [&](bool base, bool local) {
      const Element a = arm(local, true, i);
      const Element b = arm(local, false, i);
      if (!fits(prev, a, i) || !fits(a, b, i)) return false;
      const WienerDelta next_imbalance =
          imbalance + weight(i) * (static_cast<WienerDelta>(a.size) -
                                   static_cast<WienerDelta>(b.size));
      return visit(i + 1, base, next_imbalance, b);
    };

    if (try_labels(orientation, orientation)) return true;

    // Flip everything from i on: the tail swap after index i - 1.
    if (i > 1 && (imbalance == 0 || tail_gap(orientation, i - 1) == 0)) {
      if (try_labels(!orientation, !orientation)) return true;
    }
    // Flip index i alone: the component swap at i.
    const bool same_size = d_.x_size(i) == d_.y_size(i);
    if (same_size || imbalance + weight(i) * tail_gap(orientation, i) == 0) {
      if (try_labels(orientation, !orientation)) return true;
    }
    return false;
  }

  const PathDecomposition& d_;
  Direction direction_;
  bool with_degrees_;
  std::set<std::tuple<std::size_t, bool, WienerDelta, std::size_t, std::size_t>> seen_;
};

}  // namespace

bool check_size_interleaving(const PathDecomposition& d, Direction direction) {
  return InterleavingSearch(d, direction, false).run();
}

bool check_degree_interleaving(const PathDecomposition& d) {
  return InterleavingSearch(d, Direction::kMin, true).run();
}

}  // namespace wix
