#include <gtest/gtest.h>

#include <random>

#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "mostar/graph6.hpp"
#include "oracle.hpp"

using namespace mostar;

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(graph6::encode(families::complete(3)), "Bw");
  EXPECT_EQ(graph6::encode(families::complete(4)), "C~");
  EXPECT_EQ(graph6::encode(families::path(5)), "DhC");
  EXPECT_EQ(graph6::encode(Graph{}), "@");
  // Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
  const Graph petersen = graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                               {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  EXPECT_EQ(graph6::encode(petersen), "IheA@GUAo");
  EXPECT_EQ(graph6::decode("IheA@GUAo"), petersen);
}

TEST(Graph6, DecodeToleratesHeaderAndLineEnd) {
  EXPECT_EQ(graph6::decode(">>graph6<<Bw\n"), families::complete(3));
  EXPECT_EQ(graph6::decode("C~\r\n"), families::complete(4));
}

TEST(Graph6, DecodeErrors) {
  for (const char* bad : {"", "!!", "Bw~", "B", "C~~", "Bx", "~??"}) {
    try {
      graph6::decode(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << bad;
    }
  }
}

TEST(Graph6, LargeOrdersUseLongHeader) {
  for (int n : {62, 63, 64}) {
    const Graph p = families::path(n);
    const std::string text = graph6::encode(p);
    EXPECT_EQ(text[0] == '~', n >= 63) << n;
    EXPECT_EQ(graph6::decode(text), p);
  }
}

TEST(Graph6, RoundTripExhaustiveSmallOrders) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = Graph::from_pair_mask(n, mask);
      ASSERT_EQ(graph6::decode(graph6::encode(g)), g);
    }
  }
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const Graph g = oracle::random_connected(rng, n, 0.3);
    const std::string text = graph6::encode(g);
    ASSERT_EQ(graph6::decode(text), g);
    ASSERT_EQ(graph6::encode(graph6::decode(text)), text);
  }
}
