#include <gtest/gtest.h>

#include <random>

#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "oracle.hpp"

using namespace mostar;

namespace {

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Graph, DefaultIsSingleVertex) {
  Graph g;
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
  EXPECT_TRUE(is_connected(g));
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Graph g = graph_from_edges(4, {{3, 1}, {0, 2}, {2, 1}});
  const auto es = g.edges();
  ASSERT_EQ(es.size(), 3U);
  EXPECT_EQ(es[0], (Edge{0, 2}));
  EXPECT_EQ(es[1], (Edge{1, 2}));
  EXPECT_EQ(es[2], (Edge{1, 3}));
  EXPECT_EQ(Edge(3, 1).u, 1);
}

TEST(Graph, ConstructionErrors) {
  expect_error(ErrorKind::kOutOfRange, [] { graph_from_edges(3, {{0, 3}}); });
  expect_error(ErrorKind::kOutOfRange, [] { graph_from_edges(3, {{-1, 0}}); });
  expect_error(ErrorKind::kInvalidEdge, [] { graph_from_edges(3, {{1, 1}}); });
  expect_error(ErrorKind::kInvalidEdge, [] { graph_from_edges(3, {{0, 1}, {1, 0}}); });
  expect_error(ErrorKind::kOutOfRange, [] { graph_from_edges(0, {}); });
  expect_error(ErrorKind::kOutOfRange, [] { graph_from_edges(65, {}); });
}

TEST(Graph, FromRowsValidates) {
  const std::vector<Row> asym{0b10, 0b00};
  expect_error(ErrorKind::kInvalidEdge, [&] { Graph::from_rows(asym); });
  const std::vector<Row> loop{0b01};
  expect_error(ErrorKind::kInvalidEdge, [&] { Graph::from_rows(loop); });
  const std::vector<Row> ok{0b10, 0b01};
  EXPECT_EQ(Graph::from_rows(ok), graph_from_edges(2, {{0, 1}}));
}

TEST(Graph, PairMaskRoundTrip) {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      ASSERT_EQ(Graph::from_pair_mask(n, mask).pair_mask(), mask);
    }
  }
  // Pair order is column-major: (0,1), (0,2), (1,2), (0,3), ...
  EXPECT_EQ(Graph::from_pair_mask(4, 0b000100), graph_from_edges(4, {{1, 2}}));
  EXPECT_EQ(Graph::from_pair_mask(4, 0b001000), graph_from_edges(4, {{0, 3}}));
}

TEST(Graph, Distances) {
  const Graph p = families::path(5);
  EXPECT_EQ(distances_from(p, 0), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(distances_from(p, 2), (std::vector<int>{2, 1, 0, 1, 2}));
  const Graph split = graph_from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(distances_from(split, 0), (std::vector<int>{0, 1, kInfinite, kInfinite}));
  expect_error(ErrorKind::kOutOfRange, [&] { distances_from(p, 5); });
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(families::cycle(6)));
  EXPECT_FALSE(is_connected(graph_from_edges(3, {{0, 1}})));
  EXPECT_FALSE(is_connected(graph_from_edges(2, {})));
}

TEST(Graph, BridgesOfSmallGraphs) {
  EXPECT_EQ(bridge_count(families::path(6)), 5);
  EXPECT_EQ(bridge_count(families::cycle(6)), 0);
  EXPECT_EQ(bridge_count(families::star(7)), 6);
  EXPECT_EQ(bridge_count(families::complete_with_pendants(6, 2)), 2);
  // Two triangles joined by an edge.
  const Graph bow = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(bridges(bow), (std::vector<Edge>{{2, 3}}));
  expect_error(ErrorKind::kNotConnected, [] { bridges(graph_from_edges(3, {{0, 1}})); });
}

TEST(Graph, BridgesMatchEdgeRemovalExhaustively) {
  for (int n = 2; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = Graph::from_pair_mask(n, mask);
      if (!is_connected(g)) continue;
      std::vector<Edge> expected;
      for (const Edge& e : g.edges()) {
        const Row side = reachable_without(g, e.u, e);
        if (!((side >> e.v) & 1U)) expected.push_back(e);
      }
      ASSERT_EQ(bridges(g), expected) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Graph, BridgesAgreeWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.05);
    std::vector<Edge> expected;
    for (auto [u, v] : oracle::bridges_by_removal(oracle::to_adj(g))) expected.emplace_back(u, v);
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(bridges(g), expected);
  }
}

TEST(Graph, CyclomaticNumber) {
  EXPECT_EQ(cyclomatic_number(families::path(5)), 0);
  EXPECT_EQ(cyclomatic_number(families::cycle(5)), 1);
  EXPECT_EQ(cyclomatic_number(families::complete(4)), 3);
  expect_error(ErrorKind::kNotConnected, [] { cyclomatic_number(graph_from_edges(2, {})); });
}

TEST(Graph, AddingAnEdgeRaisesCyclomaticNumberByOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 20)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.2);
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.u, e.v);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        auto more = es;
        more.emplace_back(u, v);
        const Graph h = graph_from_edges(n, std::span<const std::pair<int, int>>(more));
        ASSERT_EQ(cyclomatic_number(h), cyclomatic_number(g) + 1);
        goto next;
      }
    }
  next:;
  }
}

TEST(Graph, AdjacencyIsSymmetricAndDegreesSumToTwiceSize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.1);
    int degree_sum = 0;
    for (int u = 0; u < n; ++u) {
      degree_sum += g.degree(u);
      EXPECT_FALSE(g.has_edge(u, u));
      for (int v = 0; v < n; ++v) ASSERT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
  }
}

TEST(Graph, PendantVertices) {
  EXPECT_EQ(pendant_vertices(families::path(4)), (std::vector<int>{0, 3}));
  EXPECT_EQ(pendant_vertices(families::complete_with_pendants(6, 2)), (std::vector<int>{4, 5}));
  EXPECT_TRUE(pendant_vertices(families::cycle(4)).empty());
}

TEST(Graph, PermuteAndInducedSubgraph) {
  const Graph p = families::path(3);
  const std::vector<int> perm{1, 0, 2};
  EXPECT_EQ(permute(p, perm), graph_from_edges(3, {{1, 0}, {0, 2}}));
  const Graph k4 = families::complete(4);
  EXPECT_EQ(induced_subgraph(k4, 0b1011), families::complete(3));
}
