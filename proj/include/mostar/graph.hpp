#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mostar {

using Row = std::uint64_t;

/// Undirected edge with normalized endpoints `u < v`.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Distance sentinel for vertices unreachable from the BFS source.
inline constexpr int kInfinite = -1;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Each vertex owns one 64-bit neighbour row. Every operation that "changes"
/// a graph builds a new value, so instances can be shared freely between
/// worker threads.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// K1.
  Graph() : Graph(1) {}

  /// Builds a graph from neighbour rows, validating symmetry and simplicity.
  static Graph from_rows(std::span<const Row> rows);

  /// Builds a graph on `n` vertices from an upper-triangle bit mask whose bit
  /// i is the i-th pair in graph6 column order (0,1),(0,2),(1,2),(0,3),...
  /// Only valid for n <= 11 (55 pairs).
  static Graph from_pair_mask(int n, std::uint64_t mask);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  Row neighbors(int v) const { return rows_[check_vertex(v)]; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) >> check_vertex(v)) & 1U; }

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  /// Pair mask in graph6 column order; requires n <= 11.
  std::uint64_t pair_mask() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

 private:
  explicit Graph(int n);
  int check_vertex(int v) const;

  int n_;
  int m_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);
Graph graph_from_edges(int n, std::span<const Edge> edges);
inline Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return graph_from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

/// Hop counts from `source`; unreachable vertices hold kInfinite.
std::vector<int> distances_from(const Graph& g, int source);

bool is_connected(const Graph& g);

/// Bridges in lexicographic order, via a single lowpoint DFS.
std::vector<Edge> bridges(const Graph& g);

/// Same traversal as bridges() without materializing the list; usable on
/// hot enumeration paths.
int bridge_count(const Graph& g);

/// m - n + 1. Requires a connected graph.
int cyclomatic_number(const Graph& g);

std::vector<int> pendant_vertices(const Graph& g);

/// Bitset of vertices reachable from `source` without crossing `skip`.
Row reachable_without(const Graph& g, int source, Edge skip);

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

/// Subgraph induced by the vertices in `keep`, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, Row keep);

}  // namespace mostar
