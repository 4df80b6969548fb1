#include "mostar/bounds.hpp"

#include <cstdlib>
#include <string>

#include "mostar/error.hpp"

namespace mostar::bounds {
namespace {

void check_nk(const char* what, int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw Error(ErrorKind::kOutOfRange, std::string(what) + " needs n >= 2 and 1 <= k <= n-1 (n=" + std::to_string(n) +
                                            ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

std::string_view to_string(BoundClaim c) {
  switch (c) {
    case BoundClaim::kT1Max: return "T1_MAX";
    case BoundClaim::kT2Min: return "T2_MIN";
    case BoundClaim::kT3Cyclomatic: return "T3_CYCLOMATIC";
  }
  return "?";
}

long long max_bound(int n, int k) {
  check_nk("max_bound", n, k);
  const long long nn = n;
  const long long kk = k;
  return kk * (nn - 2) + (nn - kk - 1) * kk;
}

long long min_bound(int n, int k) {
  check_nk("min_bound", n, k);
  const long long base = (n - k - 1) / 2;  // n-k-1 >= 0, so truncation is floor
  long long sum = 0;
  for (long long i = 1; i <= k; ++i) sum += std::llabs(n - 2 * (base + i));
  return sum;
}

long long max_cycle_edge_contribution(int n) {
  if (n < 3) throw Error(ErrorKind::kOutOfRange, "cycle edges need n >= 3");
  return n - 3;
}

long long cyclomatic_bound(int n, int k, int mu) {
  if (n < 3 || k < 1 || mu < 0) {
    throw Error(ErrorKind::kOutOfRange, "cyclomatic_bound needs n >= 3, k >= 1, mu >= 0 (n=" + std::to_string(n) +
                                            ", k=" + std::to_string(k) + ", mu=" + std::to_string(mu) + ")");
  }
  const long long nn = n;
  const long long kk = k;
  return kk * (nn - 2) + kk * (nn - kk - 1) + static_cast<long long>(mu) * max_cycle_edge_contribution(n);
}

BoundValue evaluate(BoundClaim claim, int n, int k, int mu) {
  switch (claim) {
    case BoundClaim::kT1Max: return {claim, n, k, mu, max_bound(n, k)};
    case BoundClaim::kT2Min: return {claim, n, k, mu, min_bound(n, k)};
    case BoundClaim::kT3Cyclomatic: return {claim, n, k, mu, cyclomatic_bound(n, k, mu)};
  }
  throw Error(ErrorKind::kOutOfRange, "unknown bound claim");
}

}  // namespace mostar::bounds
