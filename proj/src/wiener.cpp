#include "wix/wiener.hpp"

#include <string>

#include "wix/error.hpp"

namespace wix {
namespace {

WienerValue checked_add(WienerValue a, WienerValue b) {
  WienerValue out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "Wiener sum");
  return out;
}

WienerValue checked_mul(WienerValue a, WienerValue b) {
  WienerValue out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "Wiener product");
  return out;
}

}  // namespace

WienerValue wiener_pairwise(const Tree& t) {
  WienerValue twice = 0;
  for (Vertex v = 0; v < t.vertex_count(); ++v) twice = checked_add(twice, distance_of(t, v));
  return twice / 2;
}

WienerValue wiener_edges(const Tree& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 1) return 0;
  const RootedTree rt(t, 0);
  WienerValue total = 0;
  for (Vertex v = 1; v < n; ++v) {
    const WienerValue s = rt.subtree_size(v);
    total = checked_add(total, checked_mul(s, n - s));
  }
  return total;
}

WienerValue closed_form_path(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  // n(n-1)(n+1) is a product of three consecutive integers, so divisible by 6.
  const WienerValue m = n;
  return checked_mul(checked_mul(m - 1, m), m + 1) / 6;
}

WienerValue closed_form_star(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  return checked_mul(n - 1, n - 1);
}

}  // namespace wix
