#include "mostar/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "mostar/bounds.hpp"
#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/graph6.hpp"
#include "mostar/mostar.hpp"
#include "mostar/transforms.hpp"
#include "mostar/version.hpp"

namespace mostar::verify {

using enumerate::ClassSweep;
using enumerate::GraphClassFilter;
using enumerate::Objective;

std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::kL1Pendant: return "L1_PENDANT";
    case ClaimId::kL2NonPendant: return "L2_NONPENDANT";
    case ClaimId::kL3Contract: return "L3_CONTRACT";
    case ClaimId::kL4Move: return "L4_MOVE";
    case ClaimId::kL5Clique: return "L5_CLIQUE";
    case ClaimId::kL6AddEdge: return "L6_ADDEDGE";
    case ClaimId::kT1Max: return "T1_MAX";
    case ClaimId::kT2Min: return "T2_MIN";
    case ClaimId::kT3Cyclomatic: return "T3_CYCLOMATIC";
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view text) {
  for (ClaimId id : kAllClaims) {
    const std::string_view name = to_string(id);
    // Accept the full id ("L6_ADDEDGE") or its prefix tag ("L6").
    if (text == name || text == name.substr(0, name.find('_'))) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kHoldsInScope: return "HOLDS_IN_SCOPE";
    case Status::kPartial: return "PARTIAL";
    case Status::kRefuted: return "REFUTED";
  }
  return "?";
}

std::vector<const CounterexampleRecord*> ClaimVerdict::counterexamples() const {
  std::vector<const CounterexampleRecord*> out;
  for (const auto& sub : subclaims) {
    for (const auto& rec : sub.counterexamples) out.push_back(&rec);
  }
  return out;
}

Status aggregate(const std::vector<SubclaimVerdict>& subclaims) {
  Status s = Status::kHoldsInScope;
  for (const auto& sub : subclaims) s = std::max(s, sub.status);
  return s;
}

const ClassSweep& SweepCache::get(int n) {
  auto it = sweeps_.find(n);
  if (it == sweeps_.end()) it = sweeps_.emplace(n, enumerate::sweep_classes(GraphClassFilter{n, std::nullopt, std::nullopt}, workers_)).first;
  return it->second;
}

namespace {

// ---------------------------------------------------------------------------
// Per-cell tallies for exhaustive sweeps

struct Hit {
  std::uint64_t mask = 0;
  int site = 0;
};

struct Tally {
  std::uint64_t sites = 0;
  std::uint64_t violations = 0;
  std::uint64_t ties = 0;
  std::optional<Hit> first_violation;
  std::optional<Hit> first_tie;

  void site() { ++sites; }
  void violation(std::uint64_t mask, int where) {
    ++violations;
    if (!first_violation) first_violation = Hit{mask, where};
  }
  void tie(std::uint64_t mask, int where) {
    ++ties;
    if (!first_tie) first_tie = Hit{mask, where};
  }
  // `later` covers masks after ours, so our first hits stay first.
  void merge(Tally&& later) {
    sites += later.sites;
    violations += later.violations;
    ties += later.ties;
    if (!first_violation) first_violation = later.first_violation;
    if (!first_tie) first_tie = later.first_tie;
  }
};

using Cell = std::tuple<int, int, int>;  // (n, k, mu)
using Tallies = std::map<Cell, Tally>;

void merge_tallies(Tallies& out, Tallies&& later) {
  for (auto& [cell, tally] : later) out[cell].merge(std::move(tally));
}

constexpr int encode_site(int a, int b) { return a * Graph::kMaxOrder + b; }
constexpr std::pair<int, int> decode_site(int site) { return {site / Graph::kMaxOrder, site % Graph::kMaxOrder}; }

int cyclomatic_of(const Graph& g) { return g.size() - g.order() + 1; }

// Recomputes Mo by the two-BFS route and insists it matches the all-pairs
// route before a value goes into a report.
int cross_checked_mostar(const Graph& g) {
  const int fast = mostar_index(g);
  const int slow = mostar_index_two_bfs(g);
  if (fast != slow) {
    throw std::logic_error("Mostar routes disagree on " + graph6::encode(g) + ": " + std::to_string(fast) + " vs " +
                           std::to_string(slow));
  }
  return fast;
}

void add_graph(CounterexampleRecord& rec, const Graph& g) {
  rec.graphs.push_back(graph6::encode(g));
  rec.mostar.push_back(cross_checked_mostar(g));
  rec.cut_edges.push_back(bridge_count(g));
}

CounterexampleRecord base_record(std::string kind, const Graph& g) {
  CounterexampleRecord rec;
  rec.kind = std::move(kind);
  rec.n = g.order();
  rec.k = bridge_count(g);
  rec.mu = cyclomatic_of(g);
  add_graph(rec, g);
  return rec;
}

std::string scope_orders(int lo, int hi) {
  return "all labeled connected graphs with " + std::to_string(lo) + " <= n <= " + std::to_string(hi);
}

template <class Describe>
SubclaimVerdict finish(std::string name, std::string statement, const Tallies& tallies, bool three_way,
                       Describe&& describe) {
  SubclaimVerdict out;
  out.name = std::move(name);
  out.statement = std::move(statement);
  for (const auto& [cell, tally] : tallies) {
    if (tally.sites == 0) continue;
    ++out.cells_checked;
    out.sites_checked += tally.sites;
    out.violations += tally.violations;
    out.ties += tally.ties;
    const int n = std::get<0>(cell);
    if (tally.first_violation) out.counterexamples.push_back(describe(n, *tally.first_violation, false));
    if (three_way && tally.first_tie) out.counterexamples.push_back(describe(n, *tally.first_tie, true));
  }
  if (out.violations > 0) {
    out.status = Status::kRefuted;
  } else if (three_way && out.ties > 0) {
    out.status = Status::kPartial;
  }
  return out;
}

ClaimVerdict make_verdict(ClaimId id, std::string statement, std::string scope, std::vector<SubclaimVerdict> subs) {
  ClaimVerdict v;
  v.claim = id;
  v.statement = std::move(statement);
  v.scope = std::move(scope);
  for (const auto& s : subs) {
    v.cells_checked = std::max(v.cells_checked, s.cells_checked);
    v.sites_checked += s.sites_checked;
    v.violations += s.violations;
  }
  v.subclaims = std::move(subs);
  v.status = aggregate(v.subclaims);
  return v;
}

// ---------------------------------------------------------------------------
// Edge-level lemmas and the bridge identity share one sweep

struct EdgeAcc {
  Tallies pendant;
  Tallies nonpendant;
  Tallies bridge;
};

void merge_edge(EdgeAcc& out, EdgeAcc&& later) {
  merge_tallies(out.pendant, std::move(later.pendant));
  merge_tallies(out.nonpendant, std::move(later.nonpendant));
  merge_tallies(out.bridge, std::move(later.bridge));
}

void edge_visit(EdgeAcc& acc, std::uint64_t mask, const Graph& g) {
  const int n = g.order();
  std::array<Row, Graph::kMaxOrder> bridge_rows{};
  const auto found = bridges(g);
  for (const Edge& b : found) bridge_rows[b.u] |= Row{1} << b.v;
  const Cell cell{n, static_cast<int>(found.size()), cyclomatic_of(g)};
  Tally& pendant = acc.pendant[cell];
  Tally& nonpendant = acc.nonpendant[cell];
  Tally& bridge = acc.bridge[cell];
  for (const EdgeContribution& c : contribution_profile(g)) {
    const int du = g.degree(c.edge.u);
    const int dv = g.degree(c.edge.v);
    const int site = encode_site(c.edge.u, c.edge.v);
    if (std::min(du, dv) == 1 && std::max(du, dv) >= 2) {
      pendant.site();
      if (c.imbalance != n - 2) pendant.violation(mask, site);
    }
    if (du >= 2 && dv >= 2) {
      nonpendant.site();
      if (c.imbalance > n - 3) nonpendant.violation(mask, site);
    }
    if ((bridge_rows[c.edge.u] >> c.edge.v) & 1U) {
      bridge.site();
      const BridgeBalance bb = bridge_balance(g, c.edge);
      if (c.imbalance != bb.contribution || c.equidistant != 0) bridge.violation(mask, site);
    }
  }
}

EdgeAcc edge_sweep(int n_max, int workers) {
  EdgeAcc all;
  for (int n = 1; n <= n_max; ++n) {
    merge_edge(all, enumerate::reduce_connected(n, workers, std::nullopt, EdgeAcc{}, edge_visit, merge_edge));
  }
  return all;
}

CounterexampleRecord describe_edge(int n, const Hit& hit, const char* kind, const char* relation) {
  const Graph g = Graph::from_pair_mask(n, hit.mask);
  const auto [u, v] = decode_site(hit.site);
  const Edge e{u, v};
  const EdgeContribution c = edge_contribution(g, e);
  CounterexampleRecord rec = base_record(kind, g);
  rec.edge = e;
  rec.n_u = c.n_u;
  rec.n_v = c.n_v;
  rec.equidistant = c.equidistant;
  rec.imbalance = c.imbalance;
  rec.relation = relation;
  rec.note = "deg(" + std::to_string(u) + ")=" + std::to_string(g.degree(u)) + ", deg(" + std::to_string(v) +
             ")=" + std::to_string(g.degree(v));
  return rec;
}

void check_n_max(int n_max, int lo, int hi, const char* what) {
  if (n_max < lo || n_max > hi) {
    throw Error(ErrorKind::kOutOfRange, std::string(what) + ": n_max " + std::to_string(n_max) + " outside " +
                                            std::to_string(lo) + ".." + std::to_string(hi));
  }
}

std::vector<ClaimVerdict> edge_lemma_verdicts(const EdgeAcc& acc, int n_max) {
  const std::string scope = scope_orders(1, n_max) + ", every edge";
  auto l1 = finish("pendant_value", "|n_u - n_v| = n - 2 on every pendant edge", acc.pendant, false,
                   [](int n, const Hit& h, bool) { return describe_edge(n, h, "pendant_value", "imbalance == n - 2"); });
  auto l2 = finish("nonpendant_bound", "|n_u - n_v| <= n - 3 when both endpoint degrees are >= 2", acc.nonpendant,
                   false,
                   [](int n, const Hit& h, bool) { return describe_edge(n, h, "nonpendant_bound", "imbalance <= n - 3"); });
  std::vector<ClaimVerdict> out;
  out.push_back(make_verdict(ClaimId::kL1Pendant, "A pendant edge uv with deg(u) = 1, deg(v) >= 2 has |n_u - n_v| = n - 2.",
                             scope, {std::move(l1)}));
  out.push_back(make_verdict(ClaimId::kL2NonPendant,
                             "An edge whose endpoints both have degree >= 2 has |n_u - n_v| <= n - 3.", scope,
                             {std::move(l2)}));
  return out;
}

SubclaimVerdict bridge_identity_verdict(const EdgeAcc& acc) {
  return finish("bridge_contribution_identity",
                "every bridge e has |n_u - n_v| = n - 2 s(e) and no equidistant vertices", acc.bridge, false,
                [](int n, const Hit& h, bool) {
                  auto rec = describe_edge(n, h, "bridge_identity", "imbalance == n - 2 s(e) and equidistant == 0");
                  const Graph g = Graph::from_pair_mask(n, h.mask);
                  rec.claimed_value = bridge_balance(g, *rec.edge).contribution;
                  return rec;
                });
}

// ---------------------------------------------------------------------------
// Transform lemmas

struct TransformAcc {
  Tallies monotone;
  Tallies cut;
};

void merge_transform(TransformAcc& out, TransformAcc&& later) {
  merge_tallies(out.monotone, std::move(later.monotone));
  merge_tallies(out.cut, std::move(later.cut));
}

Graph apply_transform(ClaimId claim, const Graph& g, int site) {
  const auto [a, b] = decode_site(site);
  switch (claim) {
    case ClaimId::kL3Contract: return transforms::contract_bridge_append_leaf(g, Edge{a, b});
    case ClaimId::kL4Move: return transforms::move_pendant(g, a, b);
    case ClaimId::kL6AddEdge: return transforms::add_edge(g, a, b);
    default: throw std::logic_error("not a transform claim");
  }
}

// Applicable sites in increasing order.
std::vector<int> transform_sites(ClaimId claim, const Graph& g) {
  const int n = g.order();
  std::vector<int> sites;
  switch (claim) {
    case ClaimId::kL3Contract:
      for (const Edge& e : bridges(g)) {
        if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) sites.push_back(encode_site(e.u, e.v));
      }
      break;
    case ClaimId::kL4Move:
      for (int p = 0; p < n; ++p) {
        if (g.degree(p) != 1) continue;
        const int y = std::countr_zero(g.neighbors(p));
        if (g.degree(y) < 2) continue;
        for (int x = 0; x < n; ++x) {
          if (x != p && x != y && g.degree(x) >= g.degree(y)) sites.push_back(encode_site(p, x));
        }
      }
      break;
    case ClaimId::kL6AddEdge:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!g.has_edge(u, v)) sites.push_back(encode_site(u, v));
        }
      }
      break;
    default: throw std::logic_error("not a transform claim");
  }
  return sites;
}

std::string describe_site(ClaimId claim, int site) {
  const auto [a, b] = decode_site(site);
  const std::string pa = std::to_string(a);
  const std::string pb = std::to_string(b);
  switch (claim) {
    case ClaimId::kL3Contract: return "contract bridge (" + pa + "," + pb + "), leaf re-attached as " + pb;
    case ClaimId::kL4Move: return "move leaf " + pa + " to " + pb;
    case ClaimId::kL6AddEdge: return "add edge (" + pa + "," + pb + ")";
    default: return {};
  }
}

// Mo and cut-edge count for every labeled graph of one order, indexed by
// pair mask. Transforms keep the order, so images are resolved by lookup.
// Only built when the mask space is small enough to hold in memory.
class OrderTable {
 public:
  static constexpr int kMaxPairs = 21;

  OrderTable(int n, bool enabled) : n_(n) {
    const int pairs = enumerate::pair_count(n);
    if (!enabled || pairs > kMaxPairs) return;
    const std::int64_t total = std::int64_t{1} << pairs;
    mo_.assign(static_cast<std::size_t>(total), -1);
    cut_.assign(static_cast<std::size_t>(total), -1);
#pragma omp parallel for schedule(dynamic, 4096)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      if (std::popcount(static_cast<std::uint64_t>(mask)) < n - 1) continue;
      const Graph g = Graph::from_pair_mask(n, static_cast<std::uint64_t>(mask));
      if (!is_connected(g)) continue;
      mo_[static_cast<std::size_t>(mask)] = static_cast<std::int16_t>(mostar_index(g));
      cut_[static_cast<std::size_t>(mask)] = static_cast<std::int8_t>(bridge_count(g));
    }
  }

  bool ready() const { return !mo_.empty(); }

  int mo(const Graph& g) const {
    if (!ready() || g.order() != n_) return mostar_index(g);
    const int v = mo_[g.pair_mask()];
    if (v < 0) throw Error(ErrorKind::kNotConnected, "transform produced a disconnected graph");
    return v;
  }

  int cut_edges(const Graph& g) const {
    if (!ready() || g.order() != n_) return bridge_count(g);
    const int v = cut_[g.pair_mask()];
    if (v < 0) throw Error(ErrorKind::kNotConnected, "transform produced a disconnected graph");
    return v;
  }

 private:
  int n_;
  std::vector<std::int16_t> mo_;
  std::vector<std::int8_t> cut_;
};

}  // namespace

std::vector<ClaimVerdict> verify_edge_bound_lemmas(int n_max, int workers) {
  check_n_max(n_max, 2, enumerate::kHardMaxOrder, "verify_edge_bound_lemmas");
  return edge_lemma_verdicts(edge_sweep(n_max, workers), n_max);
}

SubclaimVerdict verify_bridge_identity(int n_max, int workers) {
  check_n_max(n_max, 1, enumerate::kHardMaxOrder, "verify_bridge_identity");
  return bridge_identity_verdict(edge_sweep(n_max, workers));
}

ClaimVerdict verify_transform_lemma(ClaimId claim, int n_max, int workers) {
  if (claim != ClaimId::kL3Contract && claim != ClaimId::kL4Move && claim != ClaimId::kL6AddEdge) {
    throw Error(ErrorKind::kOutOfRange, "verify_transform_lemma takes L3, L4 or L6");
  }
  check_n_max(n_max, 3, enumerate::kHardMaxOrder, "verify_transform_lemma");
  const bool tracks_cut_edges = claim != ClaimId::kL6AddEdge;

  const OrderTable* table = nullptr;
  auto visit = [&](TransformAcc& acc, std::uint64_t mask, const Graph& g) {
    const auto sites = transform_sites(claim, g);
    if (sites.empty()) return;
    const int k = table->cut_edges(g);
    const Cell cell{g.order(), k, cyclomatic_of(g)};
    Tally& mono = acc.monotone[cell];
    Tally& cut = acc.cut[cell];
    const int mo = table->mo(g);
    for (int site : sites) {
      const Graph after = apply_transform(claim, g, site);
      const int delta = table->mo(after) - mo;
      mono.site();
      if (delta < 0) {
        mono.violation(mask, site);
      } else if (delta == 0) {
        mono.tie(mask, site);
      }
      if (tracks_cut_edges) {
        cut.site();
        if (table->cut_edges(after) != k) cut.violation(mask, site);
      }
    }
  };

  TransformAcc all;
  for (int n = 1; n <= n_max; ++n) {
    // Contraction sites are few; building the table would cost more than it saves.
    const OrderTable order_table(n, claim != ClaimId::kL3Contract);
    table = &order_table;
    merge_transform(all, enumerate::reduce_connected(n, workers, std::nullopt, TransformAcc{}, visit, merge_transform));
  }

  auto describe = [&](const char* violation_kind, const char* relation) {
    return [=](int n, const Hit& hit, bool is_tie) {
      const Graph before = Graph::from_pair_mask(n, hit.mask);
      const Graph after = apply_transform(claim, before, hit.site);
      CounterexampleRecord rec = base_record(is_tie ? "tie" : violation_kind, before);
      add_graph(rec, after);
      const auto [a, b] = decode_site(hit.site);
      rec.site = {a, b};
      rec.relation = relation;
      rec.note = describe_site(claim, hit.site) + ": Mo " + std::to_string(rec.mostar[0]) + " -> " +
                 std::to_string(rec.mostar[1]) + ", cut edges " + std::to_string(rec.cut_edges[0]) + " -> " +
                 std::to_string(rec.cut_edges[1]);
      return rec;
    };
  };

  std::vector<SubclaimVerdict> subs;
  subs.push_back(finish("strict_increase", "Mo(after) > Mo(before) at every applicable site", all.monotone, true,
                        describe("decrease", "Mo(after) > Mo(before)")));
  if (tracks_cut_edges) {
    subs.push_back(finish("cut_edges_preserved", "the cut-edge count is unchanged", all.cut, false,
                          describe("cut_edge_change", "cut_edges(after) == cut_edges(before)")));
  }

  std::string statement;
  std::string scope = scope_orders(1, n_max);
  switch (claim) {
    case ClaimId::kL3Contract:
      statement =
          "Contracting a non-pendant bridge and re-attaching the freed vertex as a leaf strictly increases Mo and "
          "keeps the cut-edge count.";
      scope += ", every bridge with both endpoint degrees >= 2";
      break;
    case ClaimId::kL4Move:
      statement =
          "Moving a leaf from y to another vertex x with deg(x) >= deg(y) >= 2 strictly increases Mo and keeps the "
          "cut-edge count.";
      scope += ", every (leaf, target) pair meeting the degree condition";
      break;
    default:
      statement = "Adding an edge between two non-adjacent vertices strictly increases Mo.";
      scope += ", every non-adjacent pair";
      break;
  }
  return make_verdict(claim, std::move(statement), std::move(scope), std::move(subs));
}

namespace {

// ---------------------------------------------------------------------------
// Theorem audits

struct SubTally {
  SubclaimVerdict verdict;

  SubTally(std::string n, std::string s) {
    verdict.name = std::move(n);
    verdict.statement = std::move(s);
  }
  // Applicable check in a cell; a failure keeps its record.
  void check(TheoremCell& cell, bool ok, std::optional<CounterexampleRecord> rec) {
    ++verdict.cells_checked;
    ++verdict.sites_checked;
    cell.checks.emplace_back(verdict.name, ok);
    if (!ok) {
      ++verdict.violations;
      verdict.status = Status::kRefuted;
      if (rec) verdict.counterexamples.push_back(std::move(*rec));
    }
  }
};

std::optional<Graph> try_build(auto&& make, std::string& failure) {
  try {
    return make();
  } catch (const Error& e) {
    failure = e.what();
    return std::nullopt;
  }
}

CounterexampleRecord theorem_record(std::string kind, const TheoremCell& cell, const Graph& g, std::string relation,
                                    std::string note) {
  CounterexampleRecord rec = base_record(std::move(kind), g);
  rec.claimed_value = cell.bound;
  rec.relation = std::move(relation);
  rec.note = std::move(note);
  return rec;
}

Graph decode_witness(const std::string& g6) { return graph6::decode(g6); }

bool all_bridges_pendant(const Graph& g) {
  for (const Edge& e : bridges(g)) {
    if (g.degree(e.u) != 1 && g.degree(e.v) != 1) return false;
  }
  return true;
}

bool pendants_share_hub(const Graph& g) {
  Row hubs = 0;
  for (int p : pendant_vertices(g)) hubs |= g.neighbors(p);
  return std::popcount(hubs) <= 1;
}

bool nonpendant_clique(const Graph& g) {
  Row keep = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) keep |= Row{1} << v;
  }
  if (keep == 0) return true;
  const Graph h = induced_subgraph(g, keep);
  return 2 * h.size() == h.order() * (h.order() - 1);
}

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

IntRange clamp_range(std::optional<IntRange> r, int lo, int hi) {
  if (!r) return {lo, hi};
  return {std::max(lo, r->lo), std::min(hi, r->hi)};
}

const ClassSweep& sweep_for(int n, SweepCache* cache, std::unique_ptr<SweepCache>& own, int workers) {
  if (cache == nullptr) {
    if (!own) own = std::make_unique<SweepCache>(workers);
    cache = own.get();
  }
  return cache->get(n);
}

TheoremCell open_cell(const ClassSweep& sweep, int n, int k, std::optional<int> mu, Objective objective,
                      long long bound, int workers) {
  TheoremCell cell;
  cell.n = n;
  cell.k = k;
  cell.mu = mu;
  cell.bound = bound;
  const auto result = enumerate::extremal_from_sweep(sweep, GraphClassFilter{n, k, mu}, objective, workers);
  cell.class_size_labeled = result.class_size_labeled;
  cell.optimal_labeled = result.optimal_labeled;
  cell.truth = result.value;
  cell.witnesses = result.witnesses;
  return cell;
}

void attach_family(TheoremCell& cell, const std::optional<Graph>& family) {
  if (!family) return;
  cell.family_graph = graph6::encode(*family);
  cell.family_mo = cross_checked_mostar(*family);
}

// Extremal-family membership: every optimal graph is the family graph, and
// the family graph is itself in the class.
void check_family(SubTally& sub, TheoremCell& cell, const std::optional<Graph>& family, const std::string& failure,
                  const char* family_name) {
  if (!family) {
    cell.notes.push_back(std::string(family_name) + " undefined here: " + failure);
    sub.check(cell, false,
              theorem_record("family_undefined", cell, decode_witness(cell.witnesses.front()), "witness ~= family",
                             std::string(family_name) + " cannot be built for " + nk(cell.n, cell.k) +
                                 "; the optimum is attained by this graph instead"));
    return;
  }
  const std::string family_form = enumerate::canonical_form(*family);
  const int family_k = bridge_count(*family);
  const bool in_class = family_k == cell.k && (!cell.mu || cyclomatic_number(*family) == *cell.mu);
  if (!in_class) {
    cell.notes.push_back(std::string(family_name) + " has " + std::to_string(family_k) + " cut edges, outside the class");
  }
  const auto stray = std::find_if(cell.witnesses.begin(), cell.witnesses.end(),
                                  [&](const std::string& w) { return w != family_form; });
  const bool family_is_witness =
      std::find(cell.witnesses.begin(), cell.witnesses.end(), family_form) != cell.witnesses.end();
  const bool ok = in_class && stray == cell.witnesses.end() && family_is_witness;
  std::optional<CounterexampleRecord> rec;
  if (!ok) {
    if (stray != cell.witnesses.end()) {
      rec = theorem_record("non_family_optimum", cell, decode_witness(*stray), "witness ~= family",
                           std::string("optimal graph not isomorphic to ") + family_name);
    } else {
      rec = theorem_record("family_not_optimal", cell, *family, "Mo(family) == optimum",
                           std::string(family_name) + " is not an optimum of the class");
    }
    add_graph(*rec, *family);
  }
  sub.check(cell, ok, std::move(rec));
}

ClaimVerdict audit_t1(IntRange ns, std::optional<IntRange> k_range, int workers, SweepCache* cache,
                      ClaimVerdict* clique_out) {
  std::unique_ptr<SweepCache> own;
  SubTally bound("bound", "Mo(G) <= k(n-2) + (n-k-1)k over the class");
  SubTally attained("attainment", "the class maximum equals the bound");
  SubTally family("extremal_family", "every maximizer is isomorphic to K_{n-k}^k");
  SubTally cut_pendant("cut_edges_pendant", "every cut edge of every maximizer is pendant");
  SubTally hub("pendant_hub", "all pendant edges of every maximizer share one endpoint");
  SubTally clique("nonpendant_clique", "non-pendant vertices of every maximizer induce a complete graph");
  std::vector<TheoremCell> cells;

  for (int n = std::max(ns.lo, 2); n <= ns.hi; ++n) {
    const auto ks = clamp_range(k_range, 1, n - 1);
    for (int k = ks.lo; k <= ks.hi; ++k) {
      TheoremCell cell = open_cell(sweep_for(n, cache, own, workers), n, k, std::nullopt, Objective::kMax,
                                   bounds::max_bound(n, k), workers);
      std::string failure;
      const auto fam = try_build([&] { return families::complete_with_pendants(n, k); }, failure);
      attach_family(cell, fam);
      if (cell.empty()) {
        cell.notes.push_back("EMPTY: no connected graph of this order has exactly this many cut edges");
        cells.push_back(std::move(cell));
        continue;
      }
      const Graph best = decode_witness(cell.witnesses.front());
      const int truth = *cell.truth;
      bound.check(cell, truth <= cell.bound,
                  theorem_record("bound_violated", cell, best, "Mo <= bound",
                                 "class maximum " + std::to_string(truth) + " exceeds the bound " +
                                     std::to_string(cell.bound)));
      attained.check(cell, truth == cell.bound,
                     theorem_record("bound_not_attained", cell, best, "max Mo == bound",
                                    "class maximum " + std::to_string(truth) + " vs bound " +
                                        std::to_string(cell.bound)));
      check_family(family, cell, fam, failure, "K_{n-k}^k");

      bool pendant_ok = true;
      bool hub_ok = true;
      bool clique_ok = true;
      std::optional<Graph> pendant_bad;
      std::optional<Graph> hub_bad;
      std::optional<Graph> clique_bad;
      for (const auto& w : cell.witnesses) {
        const Graph g = decode_witness(w);
        if (!all_bridges_pendant(g) && pendant_ok) {
          pendant_ok = false;
          pendant_bad = g;
        }
        if (!pendants_share_hub(g) && hub_ok) {
          hub_ok = false;
          hub_bad = g;
        }
        if (!nonpendant_clique(g) && clique_ok) {
          clique_ok = false;
          clique_bad = g;
        }
      }
      auto rec_for = [&](const std::optional<Graph>& g, const char* kind, const char* relation) {
        std::optional<CounterexampleRecord> rec;
        if (g) rec = theorem_record(kind, cell, *g, relation, "maximizer of " + nk(n, k));
        return rec;
      };
      cut_pendant.check(cell, pendant_ok, rec_for(pendant_bad, "non_pendant_cut_edge", "all cut edges pendant"));
      hub.check(cell, hub_ok, rec_for(hub_bad, "pendants_on_several_hubs", "one common hub"));
      clique.check(cell, clique_ok, rec_for(clique_bad, "nonpendant_not_clique", "non-pendant vertices complete"));
      if (truth != cell.bound) {
        cell.notes.push_back("truth " + std::to_string(truth) + " != bound " + std::to_string(cell.bound));
      }
      cells.push_back(std::move(cell));
    }
  }

  const std::string scope = "cells (n, k) with " + std::to_string(ns.lo) + " <= n <= " + std::to_string(ns.hi) +
                            ", 1 <= k <= n-1; exhaustive maximum over labeled connected graphs";
  if (clique_out != nullptr) {
    *clique_out = make_verdict(ClaimId::kL5Clique,
                               "In every Mo-maximizer of a cut-edge class, the non-pendant vertices induce a "
                               "complete graph.",
                               scope, {clique.verdict});
    clique_out->cells = cells;
  }
  ClaimVerdict v = make_verdict(
      ClaimId::kT1Max,
      "Connected G of order n with exactly k cut edges has Mo(G) <= k(n-2) + (n-k-1)k, with equality only for "
      "K_{n-k}^k.",
      scope,
      {bound.verdict, attained.verdict, family.verdict, cut_pendant.verdict, hub.verdict, clique.verdict});
  v.cells = std::move(cells);
  return v;
}

ClaimVerdict audit_t2(IntRange ns, std::optional<IntRange> k_range, int workers, SweepCache* cache,
                      const SubclaimVerdict* bridge_identity) {
  std::unique_ptr<SweepCache> own;
  SubTally bound("bound", "Mo(G) >= sum_{i=1..k} |n - 2(floor((n-k-1)/2) + i)| over the class");
  SubTally attained("attainment", "the class minimum equals the bound");
  SubTally family("extremal_family", "every minimizer is isomorphic to B_{n,k} (P_n when k = n-1)");
  SubTally family_value("family_meets_bound", "Mo(B_{n,k}) equals the bound");
  std::vector<TheoremCell> cells;

  for (int n = std::max(ns.lo, 2); n <= ns.hi; ++n) {
    const auto ks = clamp_range(k_range, 1, n - 1);
    for (int k = ks.lo; k <= ks.hi; ++k) {
      TheoremCell cell = open_cell(sweep_for(n, cache, own, workers), n, k, std::nullopt, Objective::kMin,
                                   bounds::min_bound(n, k), workers);
      std::string failure;
      const auto fam = try_build([&] { return families::balanced_bridge_path(n, k); }, failure);
      attach_family(cell, fam);
      if (cell.empty()) {
        cell.notes.push_back("EMPTY: no connected graph of this order has exactly this many cut edges");
        cells.push_back(std::move(cell));
        continue;
      }
      const Graph best = decode_witness(cell.witnesses.front());
      const int truth = *cell.truth;
      bound.check(cell, truth >= cell.bound,
                  theorem_record("bound_violated", cell, best, "Mo >= bound",
                                 "class minimum " + std::to_string(truth) + " is below the bound " +
                                     std::to_string(cell.bound)));
      attained.check(cell, truth == cell.bound,
                     theorem_record("bound_not_attained", cell, best, "min Mo == bound",
                                    "class minimum " + std::to_string(truth) + " vs bound " +
                                        std::to_string(cell.bound)));
      check_family(family, cell, fam, failure, "B_{n,k}");
      if (fam) {
        const bool meets = *cell.family_mo == cell.bound;
        std::optional<CounterexampleRecord> rec;
        if (!meets) {
          rec = theorem_record("family_value_vs_bound", cell, *fam, "Mo(B_{n,k}) == bound",
                               "Mo(B_{n,k}) = " + std::to_string(*cell.family_mo) + " but the bound is " +
                                   std::to_string(cell.bound) + "; clique-hub edges contribute");
          cell.notes.push_back("tension: Mo(B_{n,k}) = " + std::to_string(*cell.family_mo) + " vs bound " +
                               std::to_string(cell.bound));
        }
        family_value.check(cell, meets, std::move(rec));
      }
      if (truth != cell.bound) {
        cell.notes.push_back("truth " + std::to_string(truth) + " != bound " + std::to_string(cell.bound));
      }
      cells.push_back(std::move(cell));
    }
  }

  std::vector<SubclaimVerdict> subs{bound.verdict, attained.verdict, family.verdict, family_value.verdict};
  if (bridge_identity != nullptr) subs.push_back(*bridge_identity);
  ClaimVerdict v = make_verdict(
      ClaimId::kT2Min,
      "Connected G of order n with exactly k cut edges has Mo(G) >= sum_{i=1..k} |n - 2(floor((n-k-1)/2) + i)|, "
      "with equality only for B_{n,k} (P_n when k = n-1).",
      "cells (n, k) with " + std::to_string(ns.lo) + " <= n <= " + std::to_string(ns.hi) +
          ", 1 <= k <= n-1; exhaustive minimum over labeled connected graphs",
      std::move(subs));
  v.cells = std::move(cells);
  return v;
}

ClaimVerdict audit_t3(IntRange ns, std::optional<IntRange> k_range, std::optional<IntRange> mu_range, int workers,
                      SweepCache* cache) {
  std::unique_ptr<SweepCache> own;
  SubTally bound("bound", "Mo(G) <= k(n-2) + k(n-k-1) + mu(n-3) over the class");
  SubTally attained("attainment", "the class maximum equals the bound");
  SubTally construction("construction_attains", "the hub-triangle construction landing in the cell attains the bound");
  std::vector<TheoremCell> cells;

  for (int n = std::max(ns.lo, 3); n <= ns.hi; ++n) {
    const auto ks = clamp_range(k_range, 1, n - 1);
    const auto mus = clamp_range(mu_range, 0, enumerate::pair_count(n) - n + 1);
    for (int k = ks.lo; k <= ks.hi; ++k) {
      for (int mu = mus.lo; mu <= mus.hi; ++mu) {
        TheoremCell cell = open_cell(sweep_for(n, cache, own, workers), n, k, mu, Objective::kMax,
                                     bounds::cyclomatic_bound(n, k, mu), workers);
        // Hub-triangle graphs whose measured (k, mu) fall in this cell.
        std::optional<Graph> fam;
        for (int t = 0; 2 * t < n; ++t) {
          std::string failure;
          auto g = try_build([&] { return families::hub_triangle_graph(n, k, t); }, failure);
          if (g && bridge_count(*g) == k && cyclomatic_number(*g) == mu) {
            fam = std::move(g);
            cell.notes.push_back("construction: hub_triangle_graph with " + std::to_string(t) + " triangle(s)");
            break;
          }
        }
        attach_family(cell, fam);
        if (cell.empty()) {
          cell.notes.push_back("EMPTY");
          cells.push_back(std::move(cell));
          continue;
        }
        const Graph best = decode_witness(cell.witnesses.front());
        const int truth = *cell.truth;
        bound.check(cell, truth <= cell.bound,
                    theorem_record("bound_violated", cell, best, "Mo <= bound",
                                   "class maximum " + std::to_string(truth) + " exceeds the bound " +
                                       std::to_string(cell.bound)));
        attained.check(cell, truth == cell.bound,
                       theorem_record("bound_not_attained", cell, best, "max Mo == bound",
                                      "class maximum " + std::to_string(truth) + " vs bound " +
                                          std::to_string(cell.bound)));
        if (fam) {
          const bool ok = *cell.family_mo == cell.bound;
          std::optional<CounterexampleRecord> rec;
          if (!ok) {
            rec = theorem_record("construction_misses_bound", cell, *fam, "Mo(construction) == bound",
                                 "construction has Mo " + std::to_string(*cell.family_mo) + ", bound " +
                                     std::to_string(cell.bound));
          }
          construction.check(cell, ok, std::move(rec));
        }
        cells.push_back(std::move(cell));
      }
    }
  }
  ClaimVerdict v = make_verdict(
      ClaimId::kT3Cyclomatic,
      "Connected G of order n with k cut edges and cyclomatic number mu has Mo(G) <= k(n-2) + k(n-k-1) + mu(n-3), "
      "attained by K_{n-k}^k with triangles at the hub.",
      "cells (n, k, mu) with " + std::to_string(ns.lo) + " <= n <= " + std::to_string(ns.hi) +
          ", mu the exact cyclomatic number; exhaustive maximum over labeled connected graphs",
      {bound.verdict, attained.verdict, construction.verdict});
  v.cells = std::move(cells);
  return v;
}

void check_theorem_range(IntRange ns) {
  if (ns.hi > enumerate::kHardMaxOrder || ns.lo < 1) {
    throw Error(ErrorKind::kOutOfRange, "theorem audits cover 1 <= n <= " + std::to_string(enumerate::kHardMaxOrder));
  }
}

}  // namespace

ClaimVerdict verify_theorem(ClaimId claim, IntRange n_range, std::optional<IntRange> k_range,
                            std::optional<IntRange> mu_range, int workers, SweepCache* cache) {
  check_theorem_range(n_range);
  switch (claim) {
    case ClaimId::kT1Max: return audit_t1(n_range, k_range, workers, cache, nullptr);
    case ClaimId::kT2Min: return audit_t2(n_range, k_range, workers, cache, nullptr);
    case ClaimId::kT3Cyclomatic: return audit_t3(n_range, k_range, mu_range, workers, cache);
    default: throw Error(ErrorKind::kOutOfRange, "verify_theorem takes T1, T2 or T3");
  }
}

ClaimVerdict verify_clique_lemma(IntRange n_range, int workers, SweepCache* cache) {
  check_theorem_range(n_range);
  ClaimVerdict clique;
  audit_t1(n_range, std::nullopt, workers, cache, &clique);
  return clique;
}

VerificationReport run_all(const RunConfig& config) {
  const int cap = enumerate::order_cap();
  check_n_max(config.max_n, 3, cap, "verify");
  VerificationReport report;
  report.tool = kToolName;
  report.version = kToolVersion;
  report.max_n = config.max_n;
  report.claims = config.claims.empty() ? std::vector<ClaimId>(kAllClaims.begin(), kAllClaims.end()) : config.claims;
  std::sort(report.claims.begin(), report.claims.end());
  report.claims.erase(std::unique(report.claims.begin(), report.claims.end()), report.claims.end());
  auto wants = [&](ClaimId id) { return std::binary_search(report.claims.begin(), report.claims.end(), id); };

  const int max_n = config.max_n;
  const int workers = config.workers;
  const IntRange extremal_ns{4, max_n};
  const IntRange cyclomatic_ns{std::max(3, max_n - 1), max_n};
  SweepCache cache(workers);

  std::optional<EdgeAcc> edges;
  if (wants(ClaimId::kL1Pendant) || wants(ClaimId::kL2NonPendant) || wants(ClaimId::kT2Min)) {
    edges = edge_sweep(max_n, workers);
  }
  std::optional<ClaimVerdict> clique;
  std::optional<ClaimVerdict> t1;
  if (wants(ClaimId::kL5Clique) || wants(ClaimId::kT1Max)) {
    ClaimVerdict c;
    t1 = audit_t1(extremal_ns, std::nullopt, workers, &cache, &c);
    clique = std::move(c);
  }

  for (ClaimId id : report.claims) {
    switch (id) {
      case ClaimId::kL1Pendant: report.verdicts.push_back(edge_lemma_verdicts(*edges, max_n)[0]); break;
      case ClaimId::kL2NonPendant: report.verdicts.push_back(edge_lemma_verdicts(*edges, max_n)[1]); break;
      case ClaimId::kL3Contract:
      case ClaimId::kL4Move:
      case ClaimId::kL6AddEdge: report.verdicts.push_back(verify_transform_lemma(id, max_n, workers)); break;
      case ClaimId::kL5Clique: report.verdicts.push_back(*clique); break;
      case ClaimId::kT1Max: report.verdicts.push_back(*t1); break;
      case ClaimId::kT2Min: {
        const SubclaimVerdict identity = bridge_identity_verdict(*edges);
        report.verdicts.push_back(audit_t2(extremal_ns, std::nullopt, workers, &cache, &identity));
        break;
      }
      case ClaimId::kT3Cyclomatic:
        report.verdicts.push_back(audit_t3(cyclomatic_ns, IntRange{1, 2}, std::nullopt, workers, &cache));
        break;
    }
  }
  return report;
}

}  // namespace mostar::verify
