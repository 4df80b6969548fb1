#pragma once

#include "mostar/graph.hpp"

namespace mostar::transforms {

/// Before/after pair with both Mostar indices and cut-edge counts measured
/// from scratch.
struct TransformOutcome {
  Graph before;
  Graph after;
  int mo_before = 0;
  int mo_after = 0;
  int delta = 0;
  int cut_edges_before = 0;
  int cut_edges_after = 0;
};

TransformOutcome measure(const Graph& before, const Graph& after);

/// Contracts the non-pendant bridge e = (u, v), u < v, into u and re-uses
/// index v for a new leaf hanging off u. Order is preserved.
Graph contract_bridge_append_leaf(const Graph& g, Edge e);

/// Detaches pendant vertex p from its neighbour and attaches it to x.
Graph move_pendant(const Graph& g, int p, int x);

Graph add_edge(const Graph& g, int u, int v);

}  // namespace mostar::transforms
