#include "mostar/enumerate.hpp"

#include <omp.h>

#include <array>
#include <cstdlib>

#include "mostar/error.hpp"
#include "mostar/graph6.hpp"
#include "mostar/mostar.hpp"

namespace mostar::enumerate {

int order_cap() {
  const char* env = std::getenv("MOSTAR_MAX_N");
  if (env != nullptr && std::atoi(env) >= kHardMaxOrder) return kHardMaxOrder;
  return kDefaultMaxOrder;
}

void check_order(int n, int cap) {
  if (n < 1 || n > cap) {
    throw Error(ErrorKind::kOutOfRange, "enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  }
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

bool GraphClassFilter::matches(const Graph& g) const {
  if (g.order() != n) return false;
  if (cyclomatic && g.size() - g.order() + 1 != *cyclomatic) return false;
  if (cut_edges && bridge_count(g) != *cut_edges) return false;
  return true;
}

namespace {

void add_count(std::uint64_t& total, std::uint64_t&& part) { total += part; }

}  // namespace

std::uint64_t count_connected(int n, int workers) {
  return reduce_connected(
      n, workers, std::nullopt, std::uint64_t{0}, [](std::uint64_t& count, std::uint64_t, const Graph&) { ++count; },
      add_count);
}

std::uint64_t count_class(const GraphClassFilter& filter, int workers) {
  return reduce_connected(
      filter.n, workers, filter.edge_count(), std::uint64_t{0},
      [&](std::uint64_t& count, std::uint64_t, const Graph& g) {
        if (filter.matches(g)) ++count;
      },
      add_count);
}

void CellStats::add(std::uint64_t mask, int mo) {
  ++labeled;
  if (mo < min_mo) {
    min_mo = mo;
    min_masks.clear();
  }
  if (mo == min_mo) min_masks.push_back(mask);
  if (mo > max_mo) {
    max_mo = mo;
    max_masks.clear();
  }
  if (mo == max_mo) max_masks.push_back(mask);
}

void CellStats::merge(CellStats&& later) {
  labeled += later.labeled;
  if (later.min_mo < min_mo) {
    min_mo = later.min_mo;
    min_masks = std::move(later.min_masks);
  } else if (later.min_mo == min_mo) {
    min_masks.insert(min_masks.end(), later.min_masks.begin(), later.min_masks.end());
  }
  if (later.max_mo > max_mo) {
    max_mo = later.max_mo;
    max_masks = std::move(later.max_masks);
  } else if (later.max_mo == max_mo) {
    max_masks.insert(max_masks.end(), later.max_masks.begin(), later.max_masks.end());
  }
}

namespace {

void sweep_visit(const GraphClassFilter& filter, ClassSweep& acc, std::uint64_t mask, const Graph& g) {
  const int k = bridge_count(g);
  if (filter.cut_edges && k != *filter.cut_edges) return;
  const CellKey key{k, g.size() - g.order() + 1};
  acc.cells[key].add(mask, mostar_index(g));
}

void sweep_merge(ClassSweep& out, ClassSweep&& later) {
  for (auto& [key, stats] : later.cells) out.cells[key].merge(std::move(stats));
}

}  // namespace

ClassSweep sweep_classes(const GraphClassFilter& filter, int workers) {
  ClassSweep init;
  init.n = filter.n;
  return reduce_connected(
      filter.n, workers, filter.edge_count(), init,
      [&](ClassSweep& acc, std::uint64_t mask, const Graph& g) { sweep_visit(filter, acc, mask, g); }, sweep_merge);
}

ClassSweep sweep_classes_serial(const GraphClassFilter& filter) {
  ClassSweep init;
  init.n = filter.n;
  return reduce_connected_serial(filter.n, filter.edge_count(), std::move(init),
                                 [&](ClassSweep& acc, std::uint64_t mask, const Graph& g) {
                                   sweep_visit(filter, acc, mask, g);
                                 });
}

std::string_view to_string(Objective o) { return o == Objective::kMax ? "max" : "min"; }

ExtremalResult extremal_from_sweep(const ClassSweep& sweep, const GraphClassFilter& filter, Objective objective,
                                   int workers) {
  ExtremalResult result;
  result.objective = objective;
  result.filter = filter;
  if (sweep.n != filter.n) throw Error(ErrorKind::kOutOfRange, "sweep order differs from filter order");

  std::vector<std::uint64_t> masks;
  for (const auto& [key, stats] : sweep.cells) {
    if (filter.cut_edges && key.cut_edges != *filter.cut_edges) continue;
    if (filter.cyclomatic && key.cyclomatic != *filter.cyclomatic) continue;
    result.class_size_labeled += stats.labeled;
    const int v = objective == Objective::kMax ? stats.max_mo : stats.min_mo;
    const auto& attaining = objective == Objective::kMax ? stats.max_masks : stats.min_masks;
    const bool better = !result.value || (objective == Objective::kMax ? v > *result.value : v < *result.value);
    if (better) {
      result.value = v;
      masks.clear();
    }
    if (v == *result.value) masks.insert(masks.end(), attaining.begin(), attaining.end());
  }
  result.optimal_labeled = masks.size();

  std::vector<std::string> forms(masks.size());
  const std::int64_t count = static_cast<std::int64_t>(masks.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_workers(workers))
  for (std::int64_t i = 0; i < count; ++i) {
    forms[static_cast<std::size_t>(i)] = canonical_form(Graph::from_pair_mask(filter.n, masks[static_cast<std::size_t>(i)]));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  result.witnesses = std::move(forms);
  return result;
}

ExtremalResult extremal_search(const GraphClassFilter& filter, Objective objective, int workers) {
  return extremal_from_sweep(sweep_classes(filter, workers), filter, objective, workers);
}

namespace {

// Branch-and-bound over vertex orders. Position d contributes the graph6
// column d: adjacency of the vertex placed at d to positions 0..d-1, first
// position as most significant bit. Columns have fixed widths, so comparing
// column sequences numerically is comparing graph6 strings.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::array<int, kHardMaxOrder> run() {
    dfs(0, 0, true);
    return best_order_;
  }

 private:
  // `less`: the current prefix is already strictly below best (or no best yet).
  void dfs(int depth, Row used, bool less) {
    if (depth == n_) {
      if (less) {
        best_ = columns_;
        best_order_ = order_;
        ++version_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint32_t column = 0;
      const Row nb = g_.rows()[v];
      for (int i = 0; i < depth; ++i) column = (column << 1) | static_cast<std::uint32_t>((nb >> order_[i]) & 1U);
      bool child_less = less;
      if (!less) {
        if (column > best_[depth]) continue;
        child_less = column < best_[depth];
      }
      columns_[depth] = column;
      order_[depth] = v;
      const std::uint64_t before = version_;
      dfs(depth + 1, used | (Row{1} << v), child_less);
      // A new best found below shares this prefix exactly.
      if (version_ != before) less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kHardMaxOrder> order_{};
  std::array<int, kHardMaxOrder> best_order_{};
  std::array<std::uint32_t, kHardMaxOrder> columns_{};
  std::array<std::uint32_t, kHardMaxOrder> best_{};
  std::uint64_t version_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  check_order(g.order());
  const auto order = CanonicalSearch(g).run();
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
  return graph6::encode(permute(g, perm));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mostar::enumerate
