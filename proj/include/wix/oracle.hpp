#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "wix/tree.hpp"

namespace wix {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// (n-2)! / prod_v (d(v)-1)!: labeled trees on n vertices in which vertex
/// i < k has degree ds[i] and the remaining vertices are leaves.
/// Errors: kOverflow.
std::uint64_t count_labeled(const DegreeSequence& ds);

/// Decodes a Prufer sequence over vertices 0..n-1 (n = code.size() + 2).
Tree tree_from_prufer(std::span<const Vertex> code);

/// The sorted multiset of Prufer symbols for ds (vertex i appears ds[i]-1
/// times).
std::vector<Vertex> prufer_symbols(const DegreeSequence& ds);

/// Streams every labeled tree counted by count_labeled exactly once, in
/// lexicographic order of Prufer sequence. The stream splits into partitions,
/// one per distinct leading symbol, which may be walked independently.
class LabeledTreeEnumerator {
 public:
  /// Errors: kTooLarge when count_labeled(ds) exceeds cap, kOverflow.
  explicit LabeledTreeEnumerator(const DegreeSequence& ds,
                                 std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const noexcept { return count_; }
  std::size_t partition_count() const noexcept { return partitions_.size(); }

  /// Calls visit for every tree in partition p, in order.
  void for_each_in_partition(std::size_t p,
                             const std::function<void(const Tree&)>& visit) const;
  void for_each(const std::function<void(const Tree&)>& visit) const;

 private:
  DegreeSequence ds_;
  std::uint64_t count_ = 0;
  std::vector<Vertex> symbols_;
  std::vector<Vertex> partitions_;
};

/// Convenience wrapper collecting LabeledTreeEnumerator's stream.
std::vector<Tree> enumerate_labeled(const DegreeSequence& ds,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// A uniformly random labeled tree on n vertices.
Tree random_tree(std::size_t n, std::mt19937_64& rng);

/// A random tree with degree sequence ds (uniform Prufer arrangement).
Tree random_tree(const DegreeSequence& ds, std::mt19937_64& rng);

struct ExtremalReport {
  DegreeSequence degree_sequence;
  std::uint64_t labeled_count = 0;
  std::uint64_t distinct_count = 0;
  WienerValue min_value = 0;
  WienerValue max_value = 0;
  Tree min_witness;
  Tree max_witness;
  WienerValue greedy_value = 0;
  WienerValue caterpillar_value = 0;
  bool greedy_matches_min = false;
  bool caterpillar_matches_max = false;
  /// Non-isomorphic trees attaining the minimum / maximum.
  std::uint64_t co_extremal_min = 0;
  std::uint64_t co_extremal_max = 0;
  /// Extremes recomputed over one representative per isomorphism class.
  WienerValue distinct_min_value = 0;
  WienerValue distinct_max_value = 0;

  bool theorems_hold() const noexcept {
    return greedy_matches_min && caterpillar_matches_max;
  }
};

struct ScanOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Worker threads; results do not depend on it.
  unsigned jobs = 1;
};

/// Exhaustive min/max of the Wiener index over all trees with ds, compared
/// against both constructors. Witnesses are the first extremal trees in
/// enumeration order. Errors: kTooLarge.
ExtremalReport extremal_scan(const DegreeSequence& ds, const ScanOptions& options = {});

/// Every valid degree sequence on 1..max_n vertices, ordered by n and then
/// by descending degrees.
std::vector<DegreeSequence> all_degree_sequences(std::size_t max_n);

/// extremal_scan over all_degree_sequences(max_n). Throws kTheoremViolation,
/// with the offending report serialized, on the first counterexample.
/// Errors: kTooLarge, including max_n > 12.
std::vector<ExtremalReport> verify_theorems(std::size_t max_n,
                                            const ScanOptions& options = {});

nlohmann::json to_json(const ExtremalReport& report);

}  // namespace wix
