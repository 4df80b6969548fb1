#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar::enumerate {

// Labeled graphs on n vertices are identified with masks over the C(n,2)
// vertex pairs in graph6 column order; see Graph::from_pair_mask.

inline constexpr int kDefaultMaxOrder = 7;
inline constexpr int kHardMaxOrder = 8;

/// 7, or 8 when the environment sets MOSTAR_MAX_N=8.
int order_cap();

/// Throws OutOfRange unless 1 <= n <= cap.
void check_order(int n, int cap = kHardMaxOrder);

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Resolves a worker request; 0 means all available threads.
int resolve_workers(int workers);

struct GraphClassFilter {
  int n = 1;
  std::optional<int> cut_edges;
  std::optional<int> cyclomatic;

  /// Edge count forced by the cyclomatic number, if set.
  std::optional<int> edge_count() const {
    if (!cyclomatic) return std::nullopt;
    return n - 1 + *cyclomatic;
  }
  bool matches(const Graph& g) const;
};

/// Calls visit(mask, graph) for every connected labeled graph whose mask
/// lies in [first, last), in increasing mask order.
template <class Visit>
void visit_connected_range(int n, std::uint64_t first, std::uint64_t last, std::optional<int> edges, Visit&& visit) {
  for (std::uint64_t mask = first; mask < last; ++mask) {
    const int m = std::popcount(mask);
    if (m < n - 1 || (edges && m != *edges)) continue;
    const Graph g = Graph::from_pair_mask(n, mask);
    if (!is_connected(g)) continue;
    visit(mask, g);
  }
}

/// Serial reference: one accumulator, masks in increasing order.
template <class Acc, class Visit>
Acc reduce_connected_serial(int n, std::optional<int> edges, Acc acc, Visit visit) {
  check_order(n);
  visit_connected_range(n, 0, std::uint64_t{1} << pair_count(n), edges,
                        [&](std::uint64_t mask, const Graph& g) { visit(acc, mask, g); });
  return acc;
}

/// OpenMP driver. The mask space is cut into 2^8 chunks by its high-order
/// bits; each chunk gets its own accumulator, and the partials are folded in
/// chunk order. As long as merge(acc(A), acc(B)) == acc(A then B), the
/// result is identical to reduce_connected_serial for any worker count.
template <class Acc, class Visit, class Merge>
Acc reduce_connected(int n, int workers, std::optional<int> edges, const Acc& init, Visit visit, Merge merge) {
  check_order(n);
  constexpr int kChunkBits = 8;
  const int pairs = pair_count(n);
  const int chunk_bits = std::min(pairs, kChunkBits);
  const int low_bits = pairs - chunk_bits;
  const std::int64_t chunks = std::int64_t{1} << chunk_bits;
  std::vector<Acc> partial(static_cast<std::size_t>(chunks), init);
  const int threads = resolve_workers(workers);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < chunks; ++c) {
    Acc& acc = partial[static_cast<std::size_t>(c)];
    const std::uint64_t first = static_cast<std::uint64_t>(c) << low_bits;
    const std::uint64_t last = static_cast<std::uint64_t>(c + 1) << low_bits;
    visit_connected_range(n, first, last, edges, [&](std::uint64_t mask, const Graph& g) { visit(acc, mask, g); });
  }

  Acc out = init;
  for (Acc& p : partial) merge(out, std::move(p));
  return out;
}

/// Serial visit of every labeled connected graph on n vertices; returns the count.
template <class Visit>
std::uint64_t enumerate_connected(int n, Visit&& visit) {
  return reduce_connected_serial(n, std::nullopt, std::uint64_t{0}, [&](std::uint64_t& count, std::uint64_t, const Graph& g) {
    visit(g);
    ++count;
  });
}

template <class Visit>
std::uint64_t enumerate_class(const GraphClassFilter& filter, Visit&& visit) {
  return reduce_connected_serial(filter.n, filter.edge_count(), std::uint64_t{0},
                                 [&](std::uint64_t& count, std::uint64_t, const Graph& g) {
                                   if (!filter.matches(g)) return;
                                   visit(g);
                                   ++count;
                                 });
}

std::uint64_t count_connected(int n, int workers = 0);
std::uint64_t count_class(const GraphClassFilter& filter, int workers = 0);

// Class sweep: one pass over all labeled connected graphs of order n, binned
// by (cut edges, cyclomatic number), keeping Mo extremes and the masks that
// attain them.

struct CellKey {
  int cut_edges = 0;
  int cyclomatic = 0;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellStats {
  std::uint64_t labeled = 0;
  int min_mo = INT_MAX;
  int max_mo = INT_MIN;
  std::vector<std::uint64_t> min_masks;  // increasing
  std::vector<std::uint64_t> max_masks;  // increasing

  void add(std::uint64_t mask, int mo);
  void merge(CellStats&& later);
  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct ClassSweep {
  int n = 0;
  std::map<CellKey, CellStats> cells;
  friend bool operator==(const ClassSweep&, const ClassSweep&) = default;
};

ClassSweep sweep_classes(const GraphClassFilter& filter, int workers = 0);
ClassSweep sweep_classes_serial(const GraphClassFilter& filter);

enum class Objective { kMax, kMin };

std::string_view to_string(Objective o);

struct ExtremalResult {
  Objective objective = Objective::kMax;
  GraphClassFilter filter;
  std::optional<int> value;
  std::vector<std::string> witnesses;  // canonical graph6, sorted, one per isomorphism class
  std::uint64_t class_size_labeled = 0;
  std::uint64_t optimal_labeled = 0;

  bool empty() const { return class_size_labeled == 0; }
  friend bool operator==(const ExtremalResult& a, const ExtremalResult& b) {
    return a.objective == b.objective && a.value == b.value && a.witnesses == b.witnesses &&
           a.class_size_labeled == b.class_size_labeled && a.optimal_labeled == b.optimal_labeled;
  }
};

/// Exact optimum of Mo over the class. An empty class yields a result with
/// no value and no witnesses rather than an error.
ExtremalResult extremal_search(const GraphClassFilter& filter, Objective objective, int workers = 0);

/// Same, reading from a sweep that covers filter.n.
ExtremalResult extremal_from_sweep(const ClassSweep& sweep, const GraphClassFilter& filter, Objective objective,
                                   int workers = 0);

/// Lexicographically smallest graph6 string over all n! relabelings (n <= 8).
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace mostar::enumerate
