#include <gtest/gtest.h>

#include "mostar/bounds.hpp"
#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/mostar.hpp"

using namespace mostar;
using namespace mostar::bounds;

TEST(MaxBound, Examples) {
  EXPECT_EQ(max_bound(6, 2), 14);
  EXPECT_EQ(max_bound(4, 1), 4);
  EXPECT_EQ(max_bound(5, 1), 6);
  for (int n = 2; n <= 30; ++n) {
    EXPECT_EQ(max_bound(n, n - 1), static_cast<long long>(n - 1) * (n - 2));
    EXPECT_EQ(max_bound(n, n - 1), mostar_index(families::star(n)));
  }
}

TEST(MinBound, Examples) {
  EXPECT_EQ(min_bound(9, 4), 8);
  EXPECT_EQ(min_bound(5, 1), 1);
}

TEST(MinBound, FullPathCaseIsPathIndex) {
  for (int n = 2; n <= 50; ++n) {
    long long sum = 0;
    for (int i = 1; i <= n - 1; ++i) sum += std::abs(n - 2 * i);
    EXPECT_EQ(min_bound(n, n - 1), sum) << n;
    EXPECT_EQ(min_bound(n, n - 1), mostar_index(families::path(n))) << n;
  }
}

TEST(CyclomaticBound, Examples) {
  EXPECT_EQ(cyclomatic_bound(7, 2, 1), 22);
  EXPECT_EQ(cyclomatic_bound(6, 2, 1), 17);
  EXPECT_EQ(max_cycle_edge_contribution(7), 4);
  for (int n = 3; n <= 20; ++n) {
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(cyclomatic_bound(n, k, 0), max_bound(n, k));
  }
}

TEST(Bounds, Evaluate) {
  EXPECT_EQ(evaluate(BoundClaim::kT1Max, 6, 2).value, 14);
  EXPECT_EQ(evaluate(BoundClaim::kT2Min, 9, 4).value, 8);
  EXPECT_EQ(evaluate(BoundClaim::kT3Cyclomatic, 7, 2, 1).value, 22);
  EXPECT_EQ(to_string(BoundClaim::kT2Min), "T2_MIN");
}

TEST(Bounds, OutOfRange) {
  auto rejects = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::kOutOfRange;
    }
    return false;
  };
  EXPECT_TRUE(rejects([] { max_bound(1, 1); }));
  EXPECT_TRUE(rejects([] { max_bound(5, 0); }));
  EXPECT_TRUE(rejects([] { min_bound(5, 5); }));
  EXPECT_TRUE(rejects([] { cyclomatic_bound(2, 1, 0); }));
  EXPECT_TRUE(rejects([] { cyclomatic_bound(6, 2, -1); }));
  EXPECT_TRUE(rejects([] { max_cycle_edge_contribution(2); }));
}
