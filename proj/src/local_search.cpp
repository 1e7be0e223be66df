#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "wix/error.hpp"
#include "wix/exchange.hpp"
#include "wix/wiener.hpp"

namespace wix {
namespace {

bool improves(Direction direction, WienerDelta delta) {
  return direction == Direction::kMin ? delta < 0 : delta > 0;
}

// Farthest leaf from `from`; ties broken uniformly at random.
Vertex farthest_leaf(const Tree& t, Vertex from, std::mt19937_64& rng) {
  const auto dist = distances_from(t, from);
  std::size_t best = 0;
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (v == from || !t.is_leaf(v)) continue;
    if (dist[v] > best) {
      best = dist[v];
      candidates.clear();
    }
    if (dist[v] == best) candidates.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

std::optional<ExchangeMove> best_move_on(const Tree& t, Vertex a, Vertex b, Direction direction) {
  const std::vector<Vertex> path = tree_path(t, a, b);
  const PathDecomposition d = path_decompose(t, path, path.size() % 2 == 1);
  std::optional<ExchangeMove> best;
  for (ExchangeMove& m : enumerate_moves(d)) {
    if (!improves(direction, m.predicted_delta)) continue;
    if (!best || improves(direction, m.predicted_delta - best->predicted_delta)) {
      best = std::move(m);
    }
  }
  return best;
}

}  // namespace

SearchResult local_search(const Tree& t, Direction direction, std::uint64_t seed) {
  SearchResult result{t, {wiener_edges(t)}, 0};
  if (t.vertex_count() < 4) return result;
  std::mt19937_64 rng(seed);

  while (true) {
    std::vector<Vertex> starts = leaves(result.tree);
    std::shuffle(starts.begin(), starts.end(), rng);
    std::optional<ExchangeMove> chosen;
    for (Vertex a : starts) {
      const Vertex b = farthest_leaf(result.tree, a, rng);
      if ((chosen = best_move_on(result.tree, a, b, direction))) break;
    }
    if (!chosen) break;

    Tree next = apply_move(result.tree, *chosen);
    const WienerValue expected = result.trajectory.back() + chosen->predicted_delta;
    const WienerValue actual = wiener_edges(next);
    if (actual != expected) {
      throw Error(ErrorCode::kInconsistent,
                  std::string(to_string(chosen->kind)) + " predicted " +
                      std::to_string(expected) + ", recomputed " + std::to_string(actual));
    }
    result.tree = std::move(next);
    result.trajectory.push_back(actual);
    ++result.moves;
  }
  return result;
}

}  // namespace wix
