#pragma once

// Independent slow-path reference for tests: adjacency lists, queue BFS,
// edge-deletion bridge detection and union-find connectivity. Nothing here
// calls the library's algorithms; it only reads adjacency through has_edge.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "mostar/graph.hpp"

namespace oracle {

using AdjList = std::vector<std::vector<int>>;

inline AdjList to_adj(const mostar::Graph& g) {
  AdjList adj(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u != v && g.has_edge(u, v)) adj[u].push_back(v);
    }
  }
  return adj;
}

inline std::vector<int> bfs(const AdjList& adj, int s, std::pair<int, int> skip = {-1, -1}) {
  std::vector<int> d(adj.size(), -1);
  std::queue<int> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if ((x == skip.first && y == skip.second) || (x == skip.second && y == skip.first)) continue;
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push(y);
      }
    }
  }
  return d;
}

inline bool connected(const AdjList& adj, std::pair<int, int> skip = {-1, -1}) {
  for (int x : bfs(adj, 0, skip)) {
    if (x < 0) return false;
  }
  return true;
}

struct Split {
  int n_u = 0;
  int n_v = 0;
  int tied = 0;
};

inline Split split(const AdjList& adj, int u, int v) {
  const auto du = bfs(adj, u);
  const auto dv = bfs(adj, v);
  Split s;
  for (std::size_t w = 0; w < adj.size(); ++w) {
    if (du[w] < dv[w]) {
      ++s.n_u;
    } else if (dv[w] < du[w]) {
      ++s.n_v;
    } else {
      ++s.tied;
    }
  }
  return s;
}

inline int mostar(const AdjList& adj) {
  int total = 0;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    for (int v : adj[u]) {
      if (u < v) {
        const Split s = split(adj, u, v);
        total += std::abs(s.n_u - s.n_v);
      }
    }
  }
  return total;
}

inline std::vector<std::pair<int, int>> bridges_by_removal(const AdjList& adj) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    for (int v : adj[u]) {
      if (u < v && !connected(adj, {u, v})) out.emplace_back(u, v);
    }
  }
  return out;
}

inline int smaller_side(const AdjList& adj, int u, int v) {
  int side = 0;
  for (int x : bfs(adj, u, {u, v})) side += x >= 0;
  return std::min<int>(side, static_cast<int>(adj.size()) - side);
}

/// Labeled connected graphs on n vertices: every pair mask, union-find.
inline std::uint64_t count_connected_masks(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (!((mask >> b) & 1U)) continue;
      const int a = find(pairs[b].first);
      const int c = find(pairs[b].second);
      if (a != c) {
        parent[a] = c;
        --components;
      }
    }
    count += components == 1;
  }
  return count;
}

/// Random connected graph: a random labeled spanning tree plus each other
/// pair with probability `density`.
inline mostar::Graph random_connected(std::mt19937_64& rng, int n, double density) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (int i = 1; i < n; ++i) {
    const int parent = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.emplace_back(order[i], parent);
    present[order[i]][parent] = present[parent][order[i]] = true;
  }
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!present[u][v] && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return mostar::graph_from_edges(n, std::span<const std::pair<int, int>>(edges));
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
