// Acceptance suite: one PASS/FAIL line per criterion.
//
// Criterion 2 (greedy caterpillar is the exhaustive maximum for every n <= 10)
// does not hold: {4,3,3,2} has a caterpillar with spine order (4,2,3,3) and
// Wiener index 124, one more than the greedy caterpillar. The suite reports
// that as FAIL and exits 0 only when this is the sole failure and it fails in
// exactly this way.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wix/constructors.hpp"
#include "wix/exchange.hpp"
#include "wix/oracle.hpp"
#include "wix/wiener.hpp"

namespace {

using namespace wix;
using Clock = std::chrono::steady_clock;

constexpr double kSweepSeconds = 600.0;
constexpr double kDualSeconds = 5.0;
constexpr int kDualTrees = 1000;
constexpr std::size_t kDualMaxN = 200;
constexpr int kDeltaPairs = 10'000;
constexpr int kSearchStarts = 100;

const std::set<std::string> kKnownMaxFailures{"{4,3,3,2}"};

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known_failure = false;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

struct Sweep {
  std::vector<ExtremalReport> reports;
  double seconds = 0;
};

Sweep run_sweep() {
  const auto start = Clock::now();
  Sweep sweep;
  for (const DegreeSequence& ds : all_degree_sequences(10)) {
    sweep.reports.push_back(extremal_scan(ds));
  }
  sweep.seconds = seconds_since(start);
  return sweep;
}

Outcome criterion_min(const Sweep& sweep) {
  std::vector<std::string> bad;
  for (const auto& r : sweep.reports) {
    if (!r.greedy_matches_min || r.greedy_value != r.min_value) {
      bad.push_back(r.degree_sequence.to_string());
    }
  }
  std::ostringstream s;
  s << sweep.reports.size() << " sequences, n <= 10, " << sweep.seconds << " s";
  if (!bad.empty()) s << "; mismatches: " << join(bad);
  return {bad.empty() && sweep.seconds <= kSweepSeconds, s.str()};
}

Outcome criterion_max(const Sweep& sweep) {
  std::vector<std::string> bad;
  std::set<std::string> bad_set;
  std::ostringstream s;
  for (const auto& r : sweep.reports) {
    if (r.caterpillar_matches_max && r.caterpillar_value == r.max_value) continue;
    bad.push_back(r.degree_sequence.to_string());
    bad_set.insert(bad.back());
    s << r.degree_sequence.to_string() << " caterpillar " << r.caterpillar_value << " < max "
      << r.max_value << "; ";
  }
  s << bad.size() << " of " << sweep.reports.size() << " sequences differ";
  Outcome out{bad.empty() && sweep.seconds <= kSweepSeconds, s.str()};
  out.known_failure = bad_set == kKnownMaxFailures;
  return out;
}

Outcome criterion_dual() {
  std::mt19937_64 rng(1);
  std::vector<Tree> trees;
  for (int i = 0; i < kDualTrees; ++i) trees.push_back(random_tree(1 + rng() % kDualMaxN, rng));
  const auto start = Clock::now();
  int mismatches = 0;
  for (const Tree& t : trees) mismatches += wiener_pairwise(t) != wiener_edges(t);
  const double elapsed = seconds_since(start);
  std::ostringstream s;
  s << kDualTrees << " trees, " << mismatches << " mismatches, " << elapsed << " s";
  return {mismatches == 0 && elapsed <= kDualSeconds, s.str()};
}

std::optional<ExchangeMove> random_move(const Tree& t, std::mt19937_64& rng, MoveKind kind) {
  const Vertex a = static_cast<Vertex>(rng() % t.vertex_count());
  const Vertex b = static_cast<Vertex>(rng() % t.vertex_count());
  const auto path = tree_path(t, a, b);
  PathDecomposition d = path_decompose(t, path, path.size() % 2 == 1);
  if (rng() % 2) d = d.mirrored();
  const std::size_t p = d.arm_length();
  if (p == 0) return std::nullopt;
  switch (kind) {
    case MoveKind::kTailSwap:
      if (p < 2) return std::nullopt;
      return make_tail_swap(d, 1 + rng() % (p - 1));
    case MoveKind::kComponentSwap:
      return make_component_swap(d, 1 + rng() % p);
    case MoveKind::kBranchMove: {
      const std::size_t k = 1 + rng() % p;
      if (d.y_degree(k) <= d.x_degree(k)) return std::nullopt;
      std::vector<Vertex> roots;
      for (const Branch& br : d.y_branches(k)) roots.push_back(br.root);
      std::shuffle(roots.begin(), roots.end(), rng);
      roots.resize(d.y_degree(k) - d.x_degree(k));
      return make_branch_move(d, k, roots);
    }
  }
  return std::nullopt;
}

Outcome criterion_delta() {
  std::mt19937_64 rng(2);
  const MoveKind kinds[] = {MoveKind::kTailSwap, MoveKind::kComponentSwap,
                           MoveKind::kBranchMove};
  int per_kind[3] = {0, 0, 0};
  int wrong = 0;
  for (int pair = 0; pair < kDeltaPairs; ++pair) {
    const int kind = pair % 3;
    std::optional<ExchangeMove> m;
    Tree t;
    while (!m) {
      t = random_tree(3 + rng() % 40, rng);
      m = random_move(t, rng, kinds[kind]);
    }
    const Tree after = apply_move(t, *m);
    const auto observed = static_cast<WienerDelta>(wiener_pairwise(after)) -
                          static_cast<WienerDelta>(wiener_pairwise(t));
    wrong += observed != m->predicted_delta;
    ++per_kind[kind];
  }
  std::ostringstream s;
  s << kDeltaPairs << " pairs (tail " << per_kind[0] << ", component " << per_kind[1]
    << ", branch " << per_kind[2] << "), " << wrong << " wrong";
  return {wrong == 0, s.str()};
}

Outcome criterion_structures() {
  const RootedTree greedy =
      build_greedy_tree(DegreeSequence({4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 2, 2}));
  std::set<std::size_t> leaf_heights;
  for (Vertex v : leaves(greedy.tree())) leaf_heights.insert(greedy.height(v));
  const bool layered = is_greedy_tree(greedy) && greedy.tree().degree(greedy.root()) == 4 &&
                    leaf_heights == std::set<std::size_t>{2, 3};

  const Tree cat = build_greedy_caterpillar(DegreeSequence({6, 5, 5, 5, 5, 5, 4, 3, 3}));
  std::vector<std::size_t> spine;
  if (const auto s = caterpillar_spine(cat)) {
    for (Vertex v : *s) spine.push_back(cat.degree(v));
  }
  const std::vector<std::size_t> expected{6, 5, 5, 4, 3, 3, 5, 5, 5};
  std::vector<std::size_t> reversed(spine.rbegin(), spine.rend());
  const bool spine_ok = spine == expected || reversed == expected;

  std::ostringstream s;
  s << "greedy tree " << (layered ? "ok" : "wrong") << ", greedy caterpillar spine "
    << (spine_ok ? "ok" : "wrong");
  return {layered && spine_ok, s.str()};
}

Outcome criterion_closed_forms() {
  int bad = 0;
  for (std::size_t n = 3; n <= 50; ++n) {
    const DegreeSequence twos(std::vector<int>(n - 2, 2));
    const WienerValue path = n * (n * n - 1) / 6;
    bad += wiener_edges(build_greedy_tree(twos).tree()) != path;
    bad += wiener_edges(build_greedy_caterpillar(twos)) != path;
    const DegreeSequence star({static_cast<int>(n - 1)});
    const WienerValue star_value = (n - 1) * (n - 1);
    bad += wiener_edges(build_greedy_tree(star).tree()) != star_value;
    bad += wiener_edges(build_greedy_caterpillar(star)) != star_value;
  }
  std::ostringstream s;
  s << "3 <= n <= 50, " << bad << " mismatches";
  return {bad == 0, s.str()};
}

Outcome criterion_sandwich() {
  std::mt19937_64 rng(3);
  int sequences = 0;
  int bad = 0;
  std::size_t total_moves = 0;
  for (const DegreeSequence& ds : all_degree_sequences(8)) {
    ++sequences;
    const WienerValue floor = wiener_edges(build_greedy_tree(ds).tree());
    for (int i = 0; i < kSearchStarts; ++i) {
      const Tree start = random_tree(ds, rng);
      const SearchResult r = local_search(start, Direction::kMin, rng());
      const auto& tr = r.trajectory;
      bool ok = !tr.empty() && tr.front() == wiener_edges(start) &&
                tr.back() == wiener_edges(r.tree) && tr.size() == r.moves + 1 &&
                floor <= tr.back() && tr.back() <= tr.front();
      for (std::size_t j = 1; ok && j < tr.size(); ++j) ok = tr[j] < tr[j - 1];
      bad += !ok;
      total_moves += r.moves;
    }
  }
  std::ostringstream s;
  s << sequences << " sequences x " << kSearchStarts << " starts, " << total_moves << " moves, "
    << bad << " violations";
  return {bad == 0, s.str()};
}

Outcome criterion_enumerator() {
  int sequences = 0;
  int bad = 0;
  for (const DegreeSequence& ds : all_degree_sequences(9)) {
    ++sequences;
    std::uint64_t expected = 1;
    for (std::uint64_t i = 2; i + 2 <= ds.vertex_count(); ++i) expected *= i;
    for (int d : ds.degrees()) {
      for (int i = 2; i < d; ++i) expected /= static_cast<std::uint64_t>(i);
    }
    std::uint64_t streamed = 0;
    LabeledTreeEnumerator(ds).for_each([&](const Tree&) { ++streamed; });
    bad += streamed != expected;
  }
  std::ostringstream s;
  s << sequences << " sequences, n <= 9, " << bad << " mismatches";
  return {bad == 0, s.str()};
}

}  // namespace

int main() {
  const Sweep sweep = run_sweep();
  const std::vector<std::pair<std::string, Outcome>> results{
      {"1 greedy tree is the exhaustive minimum", criterion_min(sweep)},
      {"2 greedy caterpillar is the exhaustive maximum", criterion_max(sweep)},
      {"3 pairwise and edge Wiener routes agree", criterion_dual()},
      {"4 predicted move deltas are exact", criterion_delta()},
      {"5 reference structures", criterion_structures()},
      {"6 path and star closed forms", criterion_closed_forms()},
      {"7 local search sandwich bound", criterion_sandwich()},
      {"8 enumerator stream length", criterion_enumerator()},
  };

  bool unexpected = false;
  for (const auto& [name, outcome] : results) {
    std::printf("%s criterion %s: %s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(),
                outcome.detail.c_str(), outcome.known_failure ? " [known]" : "");
    if (!outcome.pass && !outcome.known_failure) unexpected = true;
  }
  // A criterion 2 that starts passing means the known counterexample vanished,
  // which is just as much a regression as a new failure.
  if (results[1].second.pass) unexpected = true;
  return unexpected ? 1 : 0;
}
