#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mostar/graph.hpp"

namespace mostar::families {

enum class Family { kCompleteWithPendants, kBalancedBridgePath, kHubTriangle, kPath, kCycle, kComplete, kStar };

std::string_view to_string(Family f);

struct FamilySpec {
  Family family = Family::kPath;
  int n = 1;
  std::optional<int> k;
  std::optional<int> mu;
};

/// Parses "family=name,n=6,k=2[,mu=1]". Names match the constructor names.
FamilySpec parse_family_spec(std::string_view text);

Graph build(const FamilySpec& spec);

/// Clique on 0..n-k-1 with leaves n-k..n-1 hanging off vertex 0.
/// Rejects n-k = 2: the lone clique edge would itself be pendant.
Graph complete_with_pendants(int n, int k);

/// Path u_0..u_k on vertices 0..k; the remaining n-k-1 vertices form a clique
/// whose members are all adjacent to u_{floor(k/2)}.
/// Rejects n-k-1 = 1: a single extra vertex would be a leaf (k+1 bridges).
Graph balanced_bridge_path(int n, int k);

/// complete_with_pendants(n - 2t, k) plus t triangles sharing the hub, where
/// t = triangles. Order stays n; the cyclomatic number of the result is
/// whatever the clique and triangles give, callers measure it.
Graph hub_triangle_graph(int n, int k, int triangles);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,n-1} with centre 0.
Graph star(int n);

}  // namespace mostar::families
