#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wix/tree.hpp"

namespace wix {

/// One subtree hanging off a path vertex: the neighbor it attaches through and
/// its vertex count.
struct Branch {
  Vertex root = 0;
  std::size_t size = 0;
};

/// The components left after deleting the edges of a path.
///
/// The path is split at its center into two arms labeled outward: x_1, x_2, ...
/// on one side and y_1, y_2, ... on the other. An odd vertex count puts the
/// middle vertex z between the arms; an even count splits at the middle edge.
/// Both arms have the same length p. Arm indices are 1-based, so x(1) is the
/// path vertex next to the center and x(p) is an end of the path.
///
/// The component X_i holds x_i and every subtree hanging off it.
class PathDecomposition {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arm_length() const noexcept { return x_.size(); }
  bool has_center() const noexcept { return z_.has_value(); }
  std::optional<Vertex> center() const noexcept { return z_; }

  /// The path as it was given to path_decompose.
  std::span<const Vertex> path() const noexcept { return path_; }

  Vertex x(std::size_t i) const { return x_.at(i - 1); }
  Vertex y(std::size_t i) const { return y_.at(i - 1); }
  std::size_t x_size(std::size_t i) const { return x_sizes_.at(i - 1); }
  std::size_t y_size(std::size_t i) const { return y_sizes_.at(i - 1); }
  std::size_t z_size() const noexcept { return z_size_; }

  /// |V(X_{>k})| and |V(Y_{>k})|; k may range over 0..p.
  std::size_t x_tail_size(std::size_t k) const;
  std::size_t y_tail_size(std::size_t k) const;

  std::size_t x_degree(std::size_t i) const { return x_degrees_.at(i - 1); }
  std::size_t y_degree(std::size_t i) const { return y_degrees_.at(i - 1); }
  std::size_t z_degree() const noexcept { return z_degree_; }

  std::span<const Branch> x_branches(std::size_t i) const { return x_branches_.at(i - 1); }
  std::span<const Branch> y_branches(std::size_t i) const { return y_branches_.at(i - 1); }
  std::span<const Branch> z_branches() const noexcept { return z_branches_; }

  std::span<const Vertex> x_component(std::size_t i) const { return x_components_.at(i - 1); }
  std::span<const Vertex> y_component(std::size_t i) const { return y_components_.at(i - 1); }
  std::span<const Vertex> z_component() const noexcept { return z_component_; }

  /// The same decomposition with the two arms exchanged. path_decompose always
  /// returns |X_1| >= |Y_1|; the mirror is used to express moves toward the
  /// other arm.
  PathDecomposition mirrored() const;

  friend PathDecomposition path_decompose(const Tree& t, std::span<const Vertex> path,
                                          bool z_mode);

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> path_;
  std::optional<Vertex> z_;
  std::vector<Vertex> x_, y_;
  std::vector<std::size_t> x_sizes_, y_sizes_;
  std::vector<std::size_t> x_degrees_, y_degrees_;
  std::vector<std::vector<Branch>> x_branches_, y_branches_;
  std::vector<std::vector<Vertex>> x_components_, y_components_;
  std::size_t z_size_ = 0;
  std::size_t z_degree_ = 0;
  std::vector<Branch> z_branches_;
  std::vector<Vertex> z_component_;
  // Suffix sums: x_suffix_[k] = |V(X_{>k})|.
  std::vector<std::size_t> x_suffix_, y_suffix_;
};

/// Splits t along path. z_mode requires an odd number of path vertices (the
/// middle one becomes z); otherwise the count must be even.
///
/// The arm whose first component is larger becomes the x arm; ties go to the
/// arm whose first vertex has the smaller id.
///
/// Errors: kNotAPath, kBadParity, kVertexOutOfRange.
PathDecomposition path_decompose(const Tree& t, std::span<const Vertex> path, bool z_mode);

}  // namespace wix
