#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mostar/enumerate.hpp"
#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "mostar/graph6.hpp"
#include "mostar/mostar.hpp"
#include "oracle.hpp"

using namespace mostar;
using namespace mostar::enumerate;

namespace {

GraphClassFilter cls(int n, std::optional<int> k = std::nullopt, std::optional<int> mu = std::nullopt) {
  return GraphClassFilter{n, k, mu};
}

}  // namespace

TEST(Enumerate, ConnectedCountsMatchOracle) {
  const std::vector<std::uint64_t> frozen{1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_connected(n), frozen[n - 1]) << n;
    EXPECT_EQ(count_connected(n), oracle::count_connected_masks(n)) << n;
  }
}

TEST(Enumerate, VisitOrderAndLabels) {
  std::vector<std::uint64_t> masks;
  const auto total = enumerate_connected(3, [&](const Graph& g) { masks.push_back(g.pair_mask()); });
  EXPECT_EQ(total, 4U);
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{0b011, 0b101, 0b110, 0b111}));
}

TEST(Enumerate, ClassCountsOrderFour) {
  EXPECT_EQ(count_class(cls(4, 0)), 10U);
  EXPECT_EQ(count_class(cls(4, 1)), 12U);
  EXPECT_EQ(count_class(cls(4, 2)), 0U);
  EXPECT_EQ(count_class(cls(4, 3)), 16U);
  // Cayley: n^(n-2) labeled trees.
  EXPECT_EQ(count_class(cls(6, std::nullopt, 0)), 1296U);
  EXPECT_EQ(count_class(cls(5, 4)), 125U);
}

TEST(Enumerate, OrderCap) {
  try {
    count_connected(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOutOfRange);
  }
  EXPECT_THROW(check_order(0), Error);
  EXPECT_NO_THROW(check_order(8));
}

TEST(Extremal, OrderFourExamples) {
  const auto max41 = extremal_search(cls(4, 1), Objective::kMax);
  ASSERT_TRUE(max41.value.has_value());
  EXPECT_EQ(*max41.value, 4);
  EXPECT_EQ(max41.class_size_labeled, 12U);
  ASSERT_EQ(max41.witnesses.size(), 1U);
  EXPECT_TRUE(is_isomorphic(graph6::decode(max41.witnesses[0]), families::complete_with_pendants(4, 1)));

  const auto min43 = extremal_search(cls(4, 3), Objective::kMin);
  EXPECT_EQ(*min43.value, 4);
  ASSERT_EQ(min43.witnesses.size(), 1U);
  EXPECT_TRUE(is_isomorphic(graph6::decode(min43.witnesses[0]), families::path(4)));
  EXPECT_EQ(*extremal_search(cls(4, 3), Objective::kMax).value, 6);

  const auto empty = extremal_search(cls(4, 2), Objective::kMax);
  EXPECT_TRUE(empty.empty());
  EXPECT_FALSE(empty.value.has_value());
  EXPECT_TRUE(empty.witnesses.empty());
}

TEST(Extremal, FrozenOptimaFromOracle) {
  struct Row {
    int n, k, max, min;
  };
  for (const Row r : {Row{5, 1, 10, 6}, Row{5, 2, 10, 8}, Row{5, 4, 12, 8}, Row{6, 1, 20, 8}, Row{6, 2, 18, 8},
                      Row{6, 3, 18, 12}, Row{6, 5, 20, 12}}) {
    EXPECT_EQ(*extremal_search(cls(r.n, r.k), Objective::kMax).value, r.max) << r.n << "," << r.k;
    EXPECT_EQ(*extremal_search(cls(r.n, r.k), Objective::kMin).value, r.min) << r.n << "," << r.k;
  }
  EXPECT_EQ(extremal_search(cls(5, 1), Objective::kMax).class_size_labeled, 200U);
  EXPECT_EQ(extremal_search(cls(5, 2), Objective::kMin).witnesses.size(), 2U);
}

TEST(Extremal, WitnessesAreOptimalCanonicalAndDistinct) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for (Objective obj : {Objective::kMax, Objective::kMin}) {
        const auto r = extremal_search(cls(n, k), obj);
        if (r.empty()) continue;
        std::uint64_t optimal = 0;
        enumerate_class(cls(n, k), [&](const Graph& g) { optimal += mostar_index(g) == *r.value; });
        EXPECT_EQ(r.optimal_labeled, optimal);
        EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
          const Graph w = graph6::decode(r.witnesses[i]);
          EXPECT_EQ(canonical_form(w), r.witnesses[i]);
          EXPECT_EQ(mostar_index(w), *r.value);
          EXPECT_EQ(bridge_count(w), k);
          for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(is_isomorphic(w, graph6::decode(r.witnesses[j])));
        }
      }
    }
  }
}

TEST(Canonical, Examples) {
  const Graph p3a = graph_from_edges(3, {{0, 1}, {1, 2}});
  const Graph p3b = graph_from_edges(3, {{0, 2}, {1, 2}});
  const Graph p3c = graph_from_edges(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(canonical_form(p3a), canonical_form(p3b));
  EXPECT_EQ(canonical_form(p3a), canonical_form(p3c));
  EXPECT_NE(canonical_form(families::complete_with_pendants(4, 1)), canonical_form(families::star(4)));
  EXPECT_EQ(canonical_form(families::complete(4)), "C~");
}

TEST(Canonical, IsALexicographicMinimumOverRelabelings) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      const std::string s = graph6::encode(permute(g, perm));
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_EQ(canonical_form(g), best);
  }
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.35);
    const std::string form = canonical_form(g);
    for (int i = 0; i < 100; ++i) {
      ASSERT_EQ(canonical_form(permute(g, oracle::random_permutation(rng, n))), form);
    }
  }
}

TEST(Canonical, SeparatesIsomorphismClasses) {
  // 156 unlabeled graphs on 6 vertices, 112 of them connected.
  std::set<std::string> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
    all.insert(canonical_form(Graph::from_pair_mask(6, mask)));
  }
  EXPECT_EQ(all.size(), 156U);
  std::set<std::string> connected;
  enumerate_connected(6, [&](const Graph& g) { connected.insert(canonical_form(g)); });
  EXPECT_EQ(connected.size(), 112U);
}

TEST(Isomorphism, Examples) {
  EXPECT_FALSE(is_isomorphic(families::path(4), families::star(4)));
  const Graph c4 = families::cycle(4);
  const std::vector<int> perm{2, 0, 3, 1};
  EXPECT_TRUE(is_isomorphic(c4, permute(c4, perm)));
  EXPECT_FALSE(is_isomorphic(families::path(4), families::path(5)));
}

TEST(Parallel, SweepMatchesSerialForAnyWorkerCount) {
  for (int n = 1; n <= 6; ++n) {
    const ClassSweep serial = sweep_classes_serial(cls(n));
    for (int workers : {1, 3, 4}) {
      ASSERT_EQ(sweep_classes(cls(n), workers), serial) << n << " workers=" << workers;
    }
  }
  EXPECT_EQ(sweep_classes(cls(6, 2), 4), sweep_classes_serial(cls(6, 2)));
  EXPECT_EQ(sweep_classes(cls(6, std::nullopt, 1), 4), sweep_classes_serial(cls(6, std::nullopt, 1)));
}

TEST(Parallel, SweepAgreesWithDirectEnumeration) {
  const ClassSweep sweep = sweep_classes(cls(5), 2);
  std::uint64_t labeled = 0;
  for (const auto& [key, stats] : sweep.cells) {
    labeled += stats.labeled;
    EXPECT_EQ(stats.labeled, count_class(cls(5, key.cut_edges, key.cyclomatic)));
    EXPECT_FALSE(stats.min_masks.empty());
    for (std::uint64_t m : stats.max_masks) EXPECT_EQ(mostar_index(Graph::from_pair_mask(5, m)), stats.max_mo);
    for (std::uint64_t m : stats.min_masks) EXPECT_EQ(mostar_index(Graph::from_pair_mask(5, m)), stats.min_mo);
  }
  EXPECT_EQ(labeled, 728U);
}

TEST(Parallel, ExtremalIsDeterministic) {
  for (int k = 1; k <= 5; ++k) {
    const auto a = extremal_search(cls(6, k), Objective::kMax, 1);
    const auto b = extremal_search(cls(6, k), Objective::kMax, 4);
    EXPECT_EQ(a, b);
  }
  EXPECT_EQ(count_connected(6, 1), count_connected(6, 3));
}
