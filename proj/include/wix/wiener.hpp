#pragma once

#include <cstddef>

#include "wix/tree.hpp"

namespace wix {

/// Half the sum of distance_of over all vertices: one BFS per vertex, O(n^2).
/// Kept as the reference the faster route is checked against.
WienerValue wiener_pairwise(const Tree& t);

/// Sum over edges of s(e) * (n - s(e)), s(e) the size of one side. O(n).
WienerValue wiener_edges(const Tree& t);

/// Wiener index of the path on n vertices, n(n^2 - 1)/6.
WienerValue closed_form_path(std::size_t n);

/// Wiener index of the star on n vertices, (n - 1)^2.
WienerValue closed_form_star(std::size_t n);

}  // namespace wix
