#include "mostar/families.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "mostar/error.hpp"

namespace mostar::families {
namespace {

using Pairs = std::vector<std::pair<int, int>>;

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

void add_clique(Pairs& edges, int first, int count) {
  for (int a = first; a < first + count; ++a) {
    for (int b = a + 1; b < first + count; ++b) edges.emplace_back(a, b);
  }
}

std::string params(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

const std::map<std::string_view, Family>& names() {
  static const std::map<std::string_view, Family> table{
      {"complete_with_pendants", Family::kCompleteWithPendants},
      {"balanced_bridge_path", Family::kBalancedBridgePath},
      {"hub_triangle_graph", Family::kHubTriangle},
      {"path", Family::kPath},
      {"cycle", Family::kCycle},
      {"complete", Family::kComplete},
      {"star", Family::kStar},
  };
  return table;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw Error(ErrorKind::kParse, "family spec: bad integer for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

int need(const std::optional<int>& v, std::string_view name, Family f) {
  if (!v) throw Error(ErrorKind::kParse, "family " + std::string(to_string(f)) + " needs " + std::string(name));
  return *v;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [name, value] : names()) {
    if (value == f) return name;
  }
  return "unknown";
}

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  bool have_family = false;
  bool have_n = false;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::kParse, "family spec: expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "family") {
      const auto it = names().find(value);
      if (it == names().end()) throw Error(ErrorKind::kParse, "family spec: unknown family '" + std::string(value) + "'");
      spec.family = it->second;
      have_family = true;
    } else if (key == "n") {
      spec.n = parse_int(key, value);
      have_n = true;
    } else if (key == "k") {
      spec.k = parse_int(key, value);
    } else if (key == "mu") {
      spec.mu = parse_int(key, value);
    } else {
      throw Error(ErrorKind::kParse, "family spec: unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_family || !have_n) throw Error(ErrorKind::kParse, "family spec needs family= and n=");
  return spec;
}

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCompleteWithPendants: return complete_with_pendants(spec.n, need(spec.k, "k", spec.family));
    case Family::kBalancedBridgePath: return balanced_bridge_path(spec.n, need(spec.k, "k", spec.family));
    case Family::kHubTriangle:
      return hub_triangle_graph(spec.n, need(spec.k, "k", spec.family), spec.mu.value_or(0));
    case Family::kPath: return path(spec.n);
    case Family::kCycle: return cycle(spec.n);
    case Family::kComplete: return complete(spec.n);
    case Family::kStar: return star(spec.n);
  }
  throw Error(ErrorKind::kParse, "unhandled family");
}

Graph complete_with_pendants(int n, int k) {
  require(n >= 2 && n <= Graph::kMaxOrder, ErrorKind::kOutOfRange, "complete_with_pendants " + params(n, k));
  require(k >= 1 && k <= n - 1, ErrorKind::kOutOfRange, "complete_with_pendants needs 1 <= k <= n-1 " + params(n, k));
  require(n - k != 2, ErrorKind::kDegenerateFamily,
          "complete_with_pendants " + params(n, k) + ": a 2-vertex clique makes every edge a bridge");
  const int clique = n - k;
  Pairs edges;
  add_clique(edges, 0, clique);
  for (int leaf = clique; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  return graph_from_edges(n, edges);
}

Graph balanced_bridge_path(int n, int k) {
  require(n >= 2 && n <= Graph::kMaxOrder, ErrorKind::kOutOfRange, "balanced_bridge_path " + params(n, k));
  require(k >= 1 && k <= n - 1, ErrorKind::kOutOfRange, "balanced_bridge_path needs 1 <= k <= n-1 " + params(n, k));
  const int extra = n - k - 1;
  require(extra != 1, ErrorKind::kDegenerateFamily,
          "balanced_bridge_path " + params(n, k) + ": a single extra vertex is a leaf, adding a bridge");
  Pairs edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  const int middle = k / 2;
  add_clique(edges, k + 1, extra);
  for (int x = k + 1; x < n; ++x) edges.emplace_back(middle, x);
  return graph_from_edges(n, edges);
}

Graph hub_triangle_graph(int n, int k, int triangles) {
  require(triangles >= 0, ErrorKind::kOutOfRange, "hub_triangle_graph needs a non-negative triangle count");
  const int core = n - 2 * triangles;
  const int clique = core - k;
  require(k >= 1 && clique >= 1 && (clique == 1 || clique >= 3), ErrorKind::kOutOfRange,
          "hub_triangle_graph (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
              ", triangles=" + std::to_string(triangles) + "): clique would have " + std::to_string(clique) +
              " vertices");
  Pairs edges;
  add_clique(edges, 0, clique);
  for (int leaf = clique; leaf < core; ++leaf) edges.emplace_back(0, leaf);
  for (int t = 0; t < triangles; ++t) {
    const int a = core + 2 * t;
    edges.emplace_back(0, a);
    edges.emplace_back(0, a + 1);
    edges.emplace_back(a, a + 1);
  }
  return graph_from_edges(n, edges);
}

Graph path(int n) {
  require(n >= 1, ErrorKind::kOutOfRange, "path needs n >= 1");
  Pairs edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graph_from_edges(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, ErrorKind::kOutOfRange, "cycle needs n >= 3");
  Pairs edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, edges);
}

Graph complete(int n) {
  require(n >= 1, ErrorKind::kOutOfRange, "complete needs n >= 1");
  Pairs edges;
  add_clique(edges, 0, n);
  return graph_from_edges(n, edges);
}

Graph star(int n) {
  require(n >= 1, ErrorKind::kOutOfRange, "star needs n >= 1");
  Pairs edges;
  for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  return graph_from_edges(n, edges);
}

}  // namespace mostar::families
