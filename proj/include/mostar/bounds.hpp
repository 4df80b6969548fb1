#pragma once

#include <string_view>

namespace mostar::bounds {

// Closed-form right-hand sides, evaluated in exact integer arithmetic.
// Nothing here touches a graph; comparing these values with measured truth
// is the verify module's job.

enum class BoundClaim { kT1Max, kT2Min, kT3Cyclomatic };

std::string_view to_string(BoundClaim c);

struct BoundValue {
  BoundClaim claim;
  int n = 0;
  int k = 0;
  int mu = 0;
  long long value = 0;
};

/// k(n-2) + (n-k-1)k, for n >= 2 and 1 <= k <= n-1.
long long max_bound(int n, int k);

/// sum_{i=1..k} |n - 2(floor((n-k-1)/2) + i)|, for n >= 2 and 1 <= k <= n-1.
long long min_bound(int n, int k);

/// Largest imbalance available to an edge on a cycle: n - 3.
long long max_cycle_edge_contribution(int n);

/// k(n-2) + k(n-k-1) + mu * (n-3), for n >= 3, k >= 1, mu >= 0.
long long cyclomatic_bound(int n, int k, int mu);

BoundValue evaluate(BoundClaim claim, int n, int k, int mu = 0);

}  // namespace mostar::bounds
