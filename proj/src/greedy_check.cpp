#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "wix/constructors.hpp"

namespace wix {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest and largest degree over some vertex set, with a vertex attaining
// each. An empty set compares as "no constraint".
struct Extent {
  std::size_t min = kNone;
  Vertex min_at = kNoVertex;
  std::size_t max = 0;
  Vertex max_at = kNoVertex;

  bool empty() const { return min_at == kNoVertex; }

  void add(std::size_t degree, Vertex v) {
    if (min_at == kNoVertex || degree < min) {
      min = degree;
      min_at = v;
    }
    if (max_at == kNoVertex || degree > max) {
      max = degree;
      max_at = v;
    }
  }

  void merge(const Extent& other) {
    if (other.empty()) return;
    add(other.min, other.min_at);
    add(other.max, other.max_at);
  }
};

// profile[r] summarizes the vertices r levels below (r = 0 is the vertex).
using Profile = std::vector<Extent>;

void merge_into(Profile& into, const Profile& from) {
  if (into.size() < from.size()) into.resize(from.size());
  for (std::size_t r = 0; r < from.size(); ++r) into[r].merge(from[r]);
}

GreedyCheck violation(int condition, Vertex a, Vertex b, std::string detail) {
  return {false, condition, a, b, std::move(detail)};
}

// Every member of `big` must have degree >= every member of `small`, depth by
// depth, starting at `first_depth`.
std::optional<std::pair<Vertex, Vertex>> dominates(const Profile& big, const Profile& small,
                                                   std::size_t first_depth) {
  const std::size_t depth = std::min(big.size(), small.size());
  for (std::size_t r = first_depth; r < depth; ++r) {
    if (big[r].empty() || small[r].empty()) continue;
    if (big[r].min < small[r].max) return std::make_pair(big[r].min_at, small[r].max_at);
  }
  return std::nullopt;
}

// Profiles of all vertices at height h, indexed like `level`.
std::vector<Profile> descendant_profiles(const RootedTree& rt, std::size_t h,
                                         const std::vector<Vertex>& level) {
  const std::size_t n = rt.vertex_count();
  std::vector<std::size_t> slot(n, kNone);
  for (std::size_t i = 0; i < level.size(); ++i) slot[level[i]] = i;
  std::vector<Profile> profiles(level.size());
  std::vector<std::size_t> owner(n, kNone);
  for (Vertex v : rt.order()) {
    const std::size_t hv = rt.height(v);
    if (hv < h) continue;
    owner[v] = hv == h ? slot[v] : owner[rt.parent(v)];
    Profile& p = profiles[owner[v]];
    const std::size_t r = hv - h;
    if (p.size() <= r) p.resize(r + 1);
    p[r].add(rt.tree().degree(v), v);
  }
  return profiles;
}

}  // namespace

GreedyCheck is_greedy_tree(const RootedTree& rt) {
  const Tree& t = rt.tree();
  const std::size_t n = t.vertex_count();
  if (n <= 2) return {};

  auto degree = [&](Vertex v) { return t.degree(v); };

  // (1) root of maximum degree.
  for (Vertex v = 0; v < n; ++v) {
    if (degree(v) > degree(rt.root())) {
      return violation(1, rt.root(), v, "vertex " + std::to_string(v) + " outranks the root");
    }
  }

  // (2) leaf heights within one.
  Vertex low = kNoVertex, high = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (degree(v) > 1) continue;
    if (low == kNoVertex || rt.height(v) < rt.height(low)) low = v;
    if (high == kNoVertex || rt.height(v) > rt.height(high)) high = v;
  }
  if (rt.height(high) > rt.height(low) + 1) {
    return violation(2, low, high, "leaf heights " + std::to_string(rt.height(low)) + " and " +
                                       std::to_string(rt.height(high)));
  }

  std::vector<std::vector<Vertex>> levels;
  for (Vertex v : rt.order()) {
    const std::size_t h = rt.height(v);
    if (levels.size() <= h) levels.resize(h + 1);
    levels[h].push_back(v);
  }

  // (3) degrees never increase with height.
  {
    std::vector<Extent> per_level(levels.size());
    for (std::size_t h = 0; h < levels.size(); ++h) {
      for (Vertex v : levels[h]) per_level[h].add(degree(v), v);
    }
    Extent deeper;
    for (std::size_t h = levels.size(); h-- > 0;) {
      if (!deeper.empty() && per_level[h].min < deeper.max) {
        return violation(3, per_level[h].min_at, deeper.max_at,
                         "shallower vertex has the smaller degree");
      }
      deeper.merge(per_level[h]);
    }
  }

  for (std::size_t h = 0; h < levels.size(); ++h) {
    std::vector<Vertex> level = levels[h];
    std::stable_sort(level.begin(), level.end(),
                     [&](Vertex a, Vertex b) { return degree(a) > degree(b); });
    if (degree(level.front()) == degree(level.back())) continue;
    const std::vector<Profile> profiles = descendant_profiles(rt, h, level);

    // (4) descendants of a larger-degree vertex dominate those of a smaller
    // one, depth by depth.
    Profile stronger;
    for (std::size_t i = 0; i < level.size();) {
      std::size_t j = i;
      while (j < level.size() && degree(level[j]) == degree(level[i])) ++j;
      for (std::size_t w = i; w < j; ++w) {
        if (auto bad = dominates(stronger, profiles[w], 1)) {
          return violation(4, bad->first, bad->second,
                           "descendants at height " + std::to_string(h) + " out of order");
        }
      }
      for (std::size_t u = i; u < j; ++u) merge_into(stronger, profiles[u]);
      i = j;
    }

    // (5) the same between sibling sets, for vertices with different parents.
    // sibling_profile[i]: everything under the siblings of level[i],
    // excluding level[i] itself.
    std::vector<Profile> sibling_profile(level.size());
    {
      std::vector<std::size_t> index_of(n, kNone);
      for (std::size_t i = 0; i < level.size(); ++i) index_of[level[i]] = i;
      for (std::size_t i = 0; i < level.size(); ++i) {
        const Vertex p = rt.parent(level[i]);
        if (p == kNoVertex) continue;
        for (Vertex s : rt.children(p)) {
          if (s != level[i]) merge_into(sibling_profile[i], profiles[index_of[s]]);
        }
      }
    }
    // Pairwise within degree classes against a per-parent running minimum.
    std::vector<std::pair<Vertex, Profile>> stronger_by_parent;
    for (std::size_t i = 0; i < level.size();) {
      std::size_t j = i;
      while (j < level.size() && degree(level[j]) == degree(level[i])) ++j;
      for (std::size_t w = i; w < j; ++w) {
        const Vertex pw = rt.parent(level[w]);
        for (const auto& [pu, prof] : stronger_by_parent) {
          if (pu == pw) continue;
          if (auto bad = dominates(prof, sibling_profile[w], 0)) {
            return violation(5, bad->first, bad->second,
                             "sibling families at height " + std::to_string(h) + " out of order");
          }
        }
      }
      for (std::size_t u = i; u < j; ++u) {
        const Vertex pu = rt.parent(level[u]);
        auto it = std::find_if(stronger_by_parent.begin(), stronger_by_parent.end(),
                               [&](const auto& e) { return e.first == pu; });
        if (it == stronger_by_parent.end()) {
          stronger_by_parent.emplace_back(pu, sibling_profile[u]);
        } else {
          merge_into(it->second, sibling_profile[u]);
        }
      }
      i = j;
    }
  }
  return {};
}

}  // namespace wix
