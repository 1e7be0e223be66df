#include "wix/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "wix/constructors.hpp"
#include "wix/error.hpp"
#include "wix/serialize.hpp"
#include "wix/wiener.hpp"

namespace wix {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::kOverflow, "labeled tree count");
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // result * (n - i) is divisible by i + 1; cancel first to delay overflow.
    const std::uint64_t g = std::gcd(result, i + 1);
    result = checked_mul(result / g, (n - i) / ((i + 1) / g));
  }
  return result;
}

Tree single_edge() { return tree_from_edges(2, std::vector<Edge>{{0, 1}}); }

}  // namespace

std::uint64_t count_labeled(const DegreeSequence& ds) {
  if (ds.vertex_count() <= 2) return 1;
  std::uint64_t remaining = ds.vertex_count() - 2;
  std::uint64_t count = 1;
  for (int d : ds.degrees()) {
    const auto copies = static_cast<std::uint64_t>(d - 1);
    count = checked_mul(count, binomial(remaining, copies));
    remaining -= copies;
  }
  return count;
}

Tree tree_from_prufer(std::span<const Vertex> code) {
  const std::size_t n = code.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : code) {
    if (v >= n) throw Error(ErrorCode::kVertexOutOfRange, "Prufer symbol " + std::to_string(v));
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : code) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, static_cast<Vertex>(n - 1)});
  return tree_from_edges(n, edges);
}

std::vector<Vertex> prufer_symbols(const DegreeSequence& ds) {
  std::vector<Vertex> symbols;
  const auto& degrees = ds.degrees();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    symbols.insert(symbols.end(), static_cast<std::size_t>(degrees[i] - 1), static_cast<Vertex>(i));
  }
  return symbols;
}

// ---------------------------------------------------------------------------
// Enumeration

LabeledTreeEnumerator::LabeledTreeEnumerator(const DegreeSequence& ds, std::uint64_t cap)
    : ds_(ds), count_(count_labeled(ds)), symbols_(prufer_symbols(ds)) {
  if (count_ > cap) {
    throw Error(ErrorCode::kTooLarge, ds.to_string() + " has " + std::to_string(count_) +
                                          " labeled trees, cap is " + std::to_string(cap));
  }
  if (symbols_.empty()) {
    partitions_.push_back(kNoVertex);
  } else {
    std::unique_copy(symbols_.begin(), symbols_.end(), std::back_inserter(partitions_));
  }
}

void LabeledTreeEnumerator::for_each_in_partition(
    std::size_t p, const std::function<void(const Tree&)>& visit) const {
  if (p >= partitions_.size()) throw Error(ErrorCode::kIndexOutOfRange, "partition");
  if (symbols_.empty()) {
    visit(ds_.vertex_count() == 1 ? Tree() : single_edge());
    return;
  }
  const Vertex lead = partitions_[p];
  std::vector<Vertex> code = symbols_;
  code.erase(std::find(code.begin(), code.end(), lead));
  code.insert(code.begin(), lead);
  // code[1..] starts sorted, so next_permutation walks every arrangement once.
  do {
    visit(tree_from_prufer(code));
  } while (std::next_permutation(code.begin() + 1, code.end()));
}

void LabeledTreeEnumerator::for_each(const std::function<void(const Tree&)>& visit) const {
  for (std::size_t p = 0; p < partitions_.size(); ++p) for_each_in_partition(p, visit);
}

std::vector<Tree> enumerate_labeled(const DegreeSequence& ds, std::uint64_t cap) {
  LabeledTreeEnumerator enumerator(ds, cap);
  std::vector<Tree> trees;
  trees.reserve(enumerator.count());
  enumerator.for_each([&](const Tree& t) { trees.push_back(t); });
  return trees;
}

Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (n == 1) return Tree();
  if (n == 2) return single_edge();
  std::uniform_int_distribution<Vertex> symbol(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (Vertex& v : code) v = symbol(rng);
  return tree_from_prufer(code);
}

Tree random_tree(const DegreeSequence& ds, std::mt19937_64& rng) {
  if (ds.vertex_count() == 1) return Tree();
  if (ds.vertex_count() == 2) return single_edge();
  std::vector<Vertex> code = prufer_symbols(ds);
  std::shuffle(code.begin(), code.end(), rng);
  return tree_from_prufer(code);
}

// ---------------------------------------------------------------------------
// Extremal scans

namespace {

struct ScanAccumulator {
  std::uint64_t labeled = 0;
  WienerValue min_value = 0;
  WienerValue max_value = 0;
  Tree min_witness;
  Tree max_witness;
  std::map<std::string, WienerValue> classes;

  void add(const Tree& t) {
    const WienerValue sigma = wiener_edges(t);
    if (labeled == 0 || sigma < min_value) {
      min_value = sigma;
      min_witness = t;
    }
    if (labeled == 0 || sigma > max_value) {
      max_value = sigma;
      max_witness = t;
    }
    ++labeled;
    classes.emplace(canonical_code(t), sigma);
  }

  // Associative; `later` comes after *this in enumeration order, so ties keep
  // the earlier witness.
  void merge(ScanAccumulator&& later) {
    if (later.labeled == 0) return;
    if (labeled == 0 || later.min_value < min_value) {
      min_value = later.min_value;
      min_witness = std::move(later.min_witness);
    }
    if (labeled == 0 || later.max_value > max_value) {
      max_value = later.max_value;
      max_witness = std::move(later.max_witness);
    }
    labeled += later.labeled;
    classes.merge(later.classes);
  }
};

}  // namespace

ExtremalReport extremal_scan(const DegreeSequence& ds, const ScanOptions& options) {
  const LabeledTreeEnumerator enumerator(ds, options.cap);
  const std::size_t parts = enumerator.partition_count();
  std::vector<ScanAccumulator> partial(parts);

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(parts)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t p; (p = next.fetch_add(1)) < parts;) {
        enumerator.for_each_in_partition(p, [&](const Tree& t) { partial[p].add(t); });
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  ScanAccumulator total;
  for (auto& acc : partial) total.merge(std::move(acc));

  ExtremalReport report;
  report.degree_sequence = ds;
  report.labeled_count = total.labeled;
  report.distinct_count = total.classes.size();
  report.min_value = total.min_value;
  report.max_value = total.max_value;
  report.min_witness = std::move(total.min_witness);
  report.max_witness = std::move(total.max_witness);
  bool first = true;
  for (const auto& [code, sigma] : total.classes) {
    if (first || sigma < report.distinct_min_value) report.distinct_min_value = sigma;
    if (first || sigma > report.distinct_max_value) report.distinct_max_value = sigma;
    first = false;
    report.co_extremal_min += sigma == total.min_value;
    report.co_extremal_max += sigma == total.max_value;
  }
  report.greedy_value = wiener_edges(build_greedy_tree(ds).tree());
  report.caterpillar_value = wiener_edges(build_greedy_caterpillar(ds));
  report.greedy_matches_min = report.greedy_value == report.min_value;
  report.caterpillar_matches_max = report.caterpillar_value == report.max_value;
  return report;
}

namespace {

// Partitions of `remaining` into parts <= `largest`, largest parts first.
void partitions(std::size_t remaining, std::size_t largest, std::vector<int>& current,
                std::vector<DegreeSequence>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(static_cast<int>(part + 1));
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<DegreeSequence> all_degree_sequences(std::size_t max_n) {
  std::vector<DegreeSequence> out;
  if (max_n >= 1) out.push_back(DegreeSequence::single_vertex());
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<int> current;
    partitions(n - 2, n - 2, current, out);
  }
  return out;
}

std::vector<ExtremalReport> verify_theorems(std::size_t max_n, const ScanOptions& options) {
  if (max_n > 12) {
    throw Error(ErrorCode::kTooLarge, "max_n = " + std::to_string(max_n) + " exceeds 12");
  }
  std::vector<ExtremalReport> reports;
  for (const DegreeSequence& ds : all_degree_sequences(max_n)) {
    ExtremalReport report = extremal_scan(ds, options);
    if (!report.theorems_hold()) {
      throw Error(ErrorCode::kTheoremViolation, ds.to_string() + ": " + to_json(report).dump());
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

nlohmann::json to_json(const ExtremalReport& report) {
  return {
      {"degree_sequence", report.degree_sequence.degrees()},
      {"n", report.degree_sequence.vertex_count()},
      {"labeled_count", report.labeled_count},
      {"distinct_count", report.distinct_count},
      {"min_value", report.min_value},
      {"max_value", report.max_value},
      {"min_witness", to_json(report.min_witness)},
      {"max_witness", to_json(report.max_witness)},
      {"greedy_value", report.greedy_value},
      {"caterpillar_value", report.caterpillar_value},
      {"greedy_matches_min", report.greedy_matches_min},
      {"caterpillar_matches_max", report.caterpillar_matches_max},
      {"co_extremal_counts", {{"min", report.co_extremal_min}, {"max", report.co_extremal_max}}},
  };
}

}  // namespace wix
