#pragma once

#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// Per-edge split of the vertex set: strictly closer to u, strictly closer
/// to v, or tied.
struct EdgeContribution {
  Edge edge;
  int n_u = 0;
  int n_v = 0;
  int equidistant = 0;
  int imbalance = 0;

  friend bool operator==(const EdgeContribution&, const EdgeContribution&) = default;
};

struct BridgeBalance {
  Edge edge;
  int smaller_side = 0;
  int contribution = 0;  // n - 2 * smaller_side
};

/// Two BFS passes, one from each endpoint.
EdgeContribution edge_contribution(const Graph& g, Edge e);

/// Mo(G), computed from one layered BFS per vertex (all-pairs route).
int mostar_index(const Graph& g);

/// Mo(G) as the sum of edge_contribution over all edges (two-BFS route).
/// Slower; kept as the independent recomputation for reported values.
int mostar_index_two_bfs(const Graph& g);

/// One record per edge in lexicographic order, from the all-pairs route.
std::vector<EdgeContribution> contribution_profile(const Graph& g);

BridgeBalance bridge_balance(const Graph& g, Edge e);

}  // namespace mostar
