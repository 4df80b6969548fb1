#include "mostar/graph.hpp"

#include <string>

#include "mostar/error.hpp"

namespace mostar {
namespace {

constexpr Row bit(int v) { return Row{1} << v; }

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw Error(ErrorKind::kOutOfRange, "graph order " + std::to_string(n) + " outside 1..64");
  }
}

std::string edge_name(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

int Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
  return v;
}

Graph Graph::from_rows(std::span<const Row> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Row all = g.n_ == 64 ? ~Row{0} : bit(g.n_) - 1;
  int degree_sum = 0;
  for (int v = 0; v < g.n_; ++v) {
    const Row r = rows[v];
    if (r & ~all) throw Error(ErrorKind::kOutOfRange, "row " + std::to_string(v) + " names a vertex >= n");
    if (r & bit(v)) throw Error(ErrorKind::kInvalidEdge, "self-loop at " + std::to_string(v));
    for (Row rest = r; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (!((rows[w] >> v) & 1U)) throw Error(ErrorKind::kInvalidEdge, "asymmetric adjacency " + edge_name(v, w));
    }
    g.rows_[v] = r;
    degree_sum += std::popcount(r);
  }
  g.m_ = degree_sum / 2;
  return g;
}

Graph Graph::from_pair_mask(int n, std::uint64_t mask) {
  if (n > 11) throw Error(ErrorKind::kOutOfRange, "pair masks cover at most 11 vertices");
  Graph g(n);
  const int pairs = n * (n - 1) / 2;
  if (pairs < 64 && (mask >> pairs)) throw Error(ErrorKind::kOutOfRange, "pair mask has bits beyond C(n,2)");
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      if ((mask >> index) & 1U) {
        g.rows_[u] |= bit(v);
        g.rows_[v] |= bit(u);
      }
    }
  }
  g.m_ = std::popcount(mask);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (Row rest = rows_[u] & ~((bit(u) << 1) - 1); rest; rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

std::uint64_t Graph::pair_mask() const {
  if (n_ > 11) throw Error(ErrorKind::kOutOfRange, "pair masks cover at most 11 vertices");
  std::uint64_t mask = 0;
  int index = 0;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      if ((rows_[v] >> u) & 1U) mask |= std::uint64_t{1} << index;
    }
  }
  return mask;
}

namespace {

template <class Pairs>
Graph build_from_pairs(int n, const Pairs& edges) {
  std::array<Row, Graph::kMaxOrder> rows{};
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::kOutOfRange, "endpoint of " + edge_name(a, b) + " outside graph of order " + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::kInvalidEdge, "self-loop " + edge_name(a, b));
    if ((rows[a] >> b) & 1U) throw Error(ErrorKind::kInvalidEdge, "duplicate edge " + edge_name(a, b));
    rows[a] |= bit(b);
    rows[b] |= bit(a);
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

}  // namespace

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  return build_from_pairs(n, edges);
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return graph_from_edges(n, std::span<const std::pair<int, int>>(pairs));
}

std::vector<int> distances_from(const Graph& g, int source) {
  if (source < 0 || source >= g.order()) {
    throw Error(ErrorKind::kOutOfRange, "source " + std::to_string(source) + " not in graph");
  }
  const Row start = bit(source);
  std::vector<int> dist(g.order(), kInfinite);
  Row seen = start;
  Row frontier = start;
  for (int d = 0; frontier; ++d) {
    Row next = 0;
    for (Row rest = frontier; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      dist[v] = d;
      next |= g.rows()[v];
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return dist;
}

Row reachable_without(const Graph& g, int source, Edge skip) {
  const auto rows = g.rows();
  Row seen = bit(source);
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    for (Row rest = frontier; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      Row nb = rows[v];
      if (v == skip.u) nb &= ~bit(skip.v);
      if (v == skip.v) nb &= ~bit(skip.u);
      next |= nb;
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  const Row all = n == 64 ? ~Row{0} : bit(n) - 1;
  return reachable_without(g, 0, Edge{}) == all;
}

namespace {

// Iterative lowpoint DFS. Calls on_bridge(parent, child) for every tree edge
// whose child subtree has no back edge reaching the parent or above.
template <class OnBridge>
void lowpoint_dfs(const Graph& g, OnBridge&& on_bridge) {
  const int n = g.order();
  const auto rows = g.rows();
  std::array<int, Graph::kMaxOrder> disc{};
  std::array<int, Graph::kMaxOrder> low{};
  std::array<int, Graph::kMaxOrder> parent{};
  std::array<Row, Graph::kMaxOrder> pending{};
  std::array<int, Graph::kMaxOrder> stack{};
  disc.fill(-1);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int top = 0;
    stack[top] = root;
    parent[root] = -1;
    disc[root] = low[root] = timer++;
    pending[root] = rows[root];
    while (top >= 0) {
      const int v = stack[top];
      if (pending[v]) {
        const int w = std::countr_zero(pending[v]);
        pending[v] &= pending[v] - 1;
        if (w == parent[v]) continue;  // simple graph: one parent edge
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          pending[w] = rows[w];
          stack[++top] = w;
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        --top;
        const int p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) on_bridge(p, v);
        }
      }
    }
  }
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, std::string(what) + " requires a connected graph");
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g, "bridges");
  std::vector<Edge> out;
  lowpoint_dfs(g, [&](int p, int c) { out.emplace_back(p, c); });
  std::sort(out.begin(), out.end());
  return out;
}

int bridge_count(const Graph& g) {
  int count = 0;
  lowpoint_dfs(g, [&](int, int) { ++count; });
  return count;
}

int cyclomatic_number(const Graph& g) {
  require_connected(g, "cyclomatic_number");
  return g.size() - g.order() + 1;
}

std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (std::popcount(g.rows()[v]) == 1) out.push_back(v);
  }
  return out;
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::kOutOfRange, "permutation length differs from order");
  Row image = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((image >> p) & 1U)) throw Error(ErrorKind::kOutOfRange, "not a permutation");
    image |= bit(p);
  }
  std::array<Row, Graph::kMaxOrder> rows{};
  for (int u = 0; u < n; ++u) {
    for (Row rest = g.rows()[u]; rest; rest &= rest - 1) rows[perm[u]] |= bit(perm[std::countr_zero(rest)]);
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

Graph induced_subgraph(const Graph& g, Row keep) {
  std::array<int, Graph::kMaxOrder> index{};
  int count = 0;
  for (Row rest = keep; rest; rest &= rest - 1) index[std::countr_zero(rest)] = count++;
  if (count == 0) throw Error(ErrorKind::kOutOfRange, "induced subgraph on no vertices");
  std::array<Row, Graph::kMaxOrder> rows{};
  for (Row rest = keep; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    for (Row nb = g.rows()[v] & keep; nb; nb &= nb - 1) rows[index[v]] |= bit(index[std::countr_zero(nb)]);
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(count)});
}

}  // namespace mostar
