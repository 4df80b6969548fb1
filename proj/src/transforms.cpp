#include "mostar/transforms.hpp"

#include <bit>
#include <string>

#include "mostar/error.hpp"
#include "mostar/mostar.hpp"

namespace mostar::transforms {
namespace {

using Rows = std::array<Row, Graph::kMaxOrder>;

constexpr Row bit(int v) { return Row{1} << v; }

Rows copy_rows(const Graph& g) {
  Rows rows{};
  std::copy(g.rows().begin(), g.rows().end(), rows.begin());
  return rows;
}

Graph from(const Rows& rows, int n) { return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)}); }

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) + " not in graph");
}

std::string pair_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

TransformOutcome measure(const Graph& before, const Graph& after) {
  TransformOutcome out{before, after};
  out.mo_before = mostar_index(before);
  out.mo_after = mostar_index(after);
  out.delta = out.mo_after - out.mo_before;
  out.cut_edges_before = bridge_count(before);
  out.cut_edges_after = bridge_count(after);
  return out;
}

Graph contract_bridge_append_leaf(const Graph& g, Edge e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (e.u == e.v || !g.has_edge(e.u, e.v)) throw Error(ErrorKind::kNotABridge, pair_name(e.u, e.v) + " is not an edge");
  if (!is_connected(g)) throw Error(ErrorKind::kNotConnected, "contract_bridge_append_leaf requires a connected graph");
  if ((reachable_without(g, e.u, e) >> e.v) & 1U) {
    throw Error(ErrorKind::kNotABridge, pair_name(e.u, e.v) + " lies on a cycle");
  }
  if (g.degree(e.u) < 2 || g.degree(e.v) < 2) {
    throw Error(ErrorKind::kPendantBridge, pair_name(e.u, e.v) + " is a pendant edge");
  }
  const int keep = e.u;
  const int freed = e.v;
  Rows rows = copy_rows(g);
  // Across a bridge the endpoints share no neighbours, so no parallel edges arise.
  for (Row rest = rows[freed] & ~bit(keep); rest; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    rows[w] = (rows[w] & ~bit(freed)) | bit(keep);
    rows[keep] |= bit(w);
  }
  rows[freed] = bit(keep);
  return from(rows, g.order());
}

Graph move_pendant(const Graph& g, int p, int x) {
  check_vertex(g, p);
  check_vertex(g, x);
  if (g.degree(p) != 1) throw Error(ErrorKind::kNotPendant, "vertex " + std::to_string(p) + " is not pendant");
  const int y = std::countr_zero(g.neighbors(p));
  if (x == y) throw Error(ErrorKind::kInvalidMove, "vertex " + std::to_string(p) + " already hangs off " + std::to_string(x));
  if (x == p) throw Error(ErrorKind::kInvalidMove, "cannot attach a vertex to itself");
  if (g.has_edge(p, x)) throw Error(ErrorKind::kInvalidEdge, pair_name(p, x) + " already exists");
  Rows rows = copy_rows(g);
  rows[y] &= ~bit(p);
  rows[p] = bit(x);
  rows[x] |= bit(p);
  return from(rows, g.order());
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorKind::kInvalidEdge, "self-loop at " + std::to_string(u));
  if (g.has_edge(u, v)) throw Error(ErrorKind::kInvalidEdge, pair_name(u, v) + " already exists");
  Rows rows = copy_rows(g);
  rows[u] |= bit(v);
  rows[v] |= bit(u);
  return from(rows, g.order());
}

}  // namespace mostar::transforms
