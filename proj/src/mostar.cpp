#include "mostar/mostar.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "mostar/error.hpp"

namespace mostar {
namespace {

constexpr Row bit(int v) { return Row{1} << v; }

// BFS levels from one source: level[d] is the set of vertices at distance d.
struct Levels {
  std::array<Row, Graph::kMaxOrder> level;
  int depth = 0;  // number of non-empty levels
  Row reached = 0;
};

void bfs_levels(std::span<const Row> rows, int source, Levels& out) {
  Row frontier = bit(source);
  Row seen = frontier;
  int d = 0;
  while (frontier) {
    out.level[d++] = frontier;
    Row next = 0;
    for (Row rest = frontier; rest; rest &= rest - 1) next |= rows[std::countr_zero(rest)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  out.depth = d;
  out.reached = seen;
}

Row all_vertices(int n) { return n == 64 ? ~Row{0} : bit(n) - 1; }

// For adjacent endpoints every vertex's distances differ by at most one, so
// "closer to u" is exactly the union of level_u[d] & level_v[d+1].
EdgeContribution split(Edge e, const Levels& from_u, const Levels& from_v) {
  int n_u = 0;
  int n_v = 0;
  int tied = 0;
  const int depth = std::max(from_u.depth, from_v.depth);
  auto at = [](const Levels& l, int d) { return d < l.depth ? l.level[d] : Row{0}; };
  for (int d = 0; d < depth; ++d) {
    n_u += std::popcount(at(from_u, d) & at(from_v, d + 1));
    n_v += std::popcount(at(from_v, d) & at(from_u, d + 1));
    tied += std::popcount(at(from_u, d) & at(from_v, d));
  }
  return EdgeContribution{e, n_u, n_v, tied, std::abs(n_u - n_v)};
}

void require_connected_reach(const Graph& g, const Levels& from_any, const char* what) {
  if (from_any.reached != all_vertices(g.order())) {
    throw Error(ErrorKind::kNotConnected, std::string(what) + " requires a connected graph");
  }
}

template <class OnEdge>
void for_each_split(const Graph& g, OnEdge&& on_edge) {
  const int n = g.order();
  const auto rows = g.rows();
  std::array<Levels, Graph::kMaxOrder> levels;
  for (int v = 0; v < n; ++v) bfs_levels(rows, v, levels[v]);
  require_connected_reach(g, levels[0], "mostar_index");
  for (int u = 0; u < n; ++u) {
    for (Row rest = rows[u] & ~((bit(u) << 1) - 1); rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      on_edge(split(Edge{u, v}, levels[u], levels[v]));
    }
  }
}

}  // namespace

EdgeContribution edge_contribution(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw Error(ErrorKind::kNotAnEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  Levels from_u;
  Levels from_v;
  bfs_levels(g.rows(), e.u, from_u);
  require_connected_reach(g, from_u, "edge_contribution");
  bfs_levels(g.rows(), e.v, from_v);
  return split(e, from_u, from_v);
}

int mostar_index(const Graph& g) {
  int total = 0;
  for_each_split(g, [&](const EdgeContribution& c) { total += c.imbalance; });
  return total;
}

int mostar_index_two_bfs(const Graph& g) {
  int total = 0;
  for (const Edge& e : g.edges()) total += edge_contribution(g, e).imbalance;
  if (g.size() == 0 && g.order() > 1) throw Error(ErrorKind::kNotConnected, "mostar_index requires a connected graph");
  return total;
}

std::vector<EdgeContribution> contribution_profile(const Graph& g) {
  std::vector<EdgeContribution> out;
  out.reserve(g.size());
  for_each_split(g, [&](const EdgeContribution& c) { out.push_back(c); });
  return out;
}

BridgeBalance bridge_balance(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw Error(ErrorKind::kNotABridge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
  if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, "bridge_balance requires a connected graph");
  const Row side = reachable_without(g, e.u, e);
  if ((side >> e.v) & 1U) {
    throw Error(ErrorKind::kNotABridge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") lies on a cycle");
  }
  const int n = g.order();
  const int smaller = std::min(std::popcount(side), n - std::popcount(side));
  return BridgeBalance{e, smaller, n - 2 * smaller};
}

}  // namespace mostar
