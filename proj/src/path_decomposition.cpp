#include "wix/path_decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wix/error.hpp"

namespace wix {
namespace {

struct Anchored {
  std::vector<Vertex> component;
  std::vector<Branch> branches;
};

// Collects the component of anchor after the path edges are removed: a BFS
// from the anchor that never enters another path vertex.
Anchored collect(const Tree& t, Vertex anchor, const std::vector<char>& on_path,
                 std::vector<char>& seen) {
  Anchored out;
  out.component.push_back(anchor);
  seen[anchor] = 1;
  for (Vertex root : t.neighbors(anchor)) {
    if (on_path[root]) continue;
    const std::size_t before = out.component.size();
    seen[root] = 1;
    out.component.push_back(root);
    for (std::size_t head = before; head < out.component.size(); ++head) {
      for (Vertex w : t.neighbors(out.component[head])) {
        if (seen[w]) continue;
        seen[w] = 1;
        out.component.push_back(w);
      }
    }
    out.branches.push_back({root, out.component.size() - before});
  }
  std::sort(out.component.begin(), out.component.end());
  return out;
}

}  // namespace

std::size_t PathDecomposition::x_tail_size(std::size_t k) const {
  if (k > arm_length()) throw Error(ErrorCode::kIndexOutOfRange, "k = " + std::to_string(k));
  return x_suffix_[k];
}

std::size_t PathDecomposition::y_tail_size(std::size_t k) const {
  if (k > arm_length()) throw Error(ErrorCode::kIndexOutOfRange, "k = " + std::to_string(k));
  return y_suffix_[k];
}

PathDecomposition PathDecomposition::mirrored() const {
  PathDecomposition m = *this;
  std::swap(m.x_, m.y_);
  std::swap(m.x_sizes_, m.y_sizes_);
  std::swap(m.x_degrees_, m.y_degrees_);
  std::swap(m.x_branches_, m.y_branches_);
  std::swap(m.x_components_, m.y_components_);
  std::swap(m.x_suffix_, m.y_suffix_);
  return m;
}

PathDecomposition path_decompose(const Tree& t, std::span<const Vertex> path, bool z_mode) {
  const std::size_t n = t.vertex_count();
  if (path.empty()) throw Error(ErrorCode::kNotAPath, "empty path");
  std::vector<char> on_path(n, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v >= n) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v));
    if (on_path[v]) throw Error(ErrorCode::kNotAPath, "vertex " + std::to_string(v) + " repeats");
    on_path[v] = 1;
    if (i > 0 && !t.has_edge(path[i - 1], v)) {
      throw Error(ErrorCode::kNotAPath, "no edge between " + std::to_string(path[i - 1]) +
                                            " and " + std::to_string(v));
    }
  }
  const bool odd = path.size() % 2 == 1;
  if (odd != z_mode) {
    throw Error(ErrorCode::kBadParity,
                std::to_string(path.size()) + " path vertices with z_mode = " +
                    (z_mode ? "true" : "false"));
  }

  PathDecomposition d;
  d.n_ = n;
  d.path_.assign(path.begin(), path.end());

  // Arms read outward from the center.
  const std::size_t arm = path.size() / 2;
  std::vector<Vertex> right, left;
  const std::size_t right_start = z_mode ? arm + 1 : arm;
  for (std::size_t i = 0; i < arm; ++i) {
    right.push_back(path[right_start + i]);
    left.push_back(path[arm - 1 - i]);
  }

  std::vector<char> seen(n, 0);
  if (z_mode) {
    d.z_ = path[arm];
    Anchored z = collect(t, path[arm], on_path, seen);
    d.z_size_ = z.component.size();
    d.z_degree_ = t.degree(path[arm]);
    d.z_component_ = std::move(z.component);
    d.z_branches_ = std::move(z.branches);
  }

  auto fill = [&](const std::vector<Vertex>& anchors, std::vector<Vertex>& ids,
                  std::vector<std::size_t>& sizes, std::vector<std::size_t>& degrees,
                  std::vector<std::vector<Branch>>& branches,
                  std::vector<std::vector<Vertex>>& components) {
    ids = anchors;
    for (Vertex a : anchors) {
      Anchored c = collect(t, a, on_path, seen);
      sizes.push_back(c.component.size());
      degrees.push_back(t.degree(a));
      branches.push_back(std::move(c.branches));
      components.push_back(std::move(c.component));
    }
  };
  fill(right, d.x_, d.x_sizes_, d.x_degrees_, d.x_branches_, d.x_components_);
  fill(left, d.y_, d.y_sizes_, d.y_degrees_, d.y_branches_, d.y_components_);

  auto suffix = [](const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> s(sizes.size() + 1, 0);
    for (std::size_t i = sizes.size(); i-- > 0;) s[i] = s[i + 1] + sizes[i];
    return s;
  };
  d.x_suffix_ = suffix(d.x_sizes_);
  d.y_suffix_ = suffix(d.y_sizes_);

  if (arm > 0) {
    const bool swap_sides =
        d.y_sizes_[0] > d.x_sizes_[0] || (d.y_sizes_[0] == d.x_sizes_[0] && d.y_[0] < d.x_[0]);
    if (swap_sides) return d.mirrored();
  }
  return d;
}

}  // namespace wix
