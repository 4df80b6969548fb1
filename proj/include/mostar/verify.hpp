#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mostar/enumerate.hpp"
#include "mostar/graph.hpp"

namespace mostar::verify {

enum class ClaimId { kL1Pendant, kL2NonPendant, kL3Contract, kL4Move, kL5Clique, kL6AddEdge, kT1Max, kT2Min, kT3Cyclomatic };

inline constexpr std::array<ClaimId, 9> kAllClaims{ClaimId::kL1Pendant, ClaimId::kL2NonPendant, ClaimId::kL3Contract,
                                                   ClaimId::kL4Move,    ClaimId::kL5Clique,     ClaimId::kL6AddEdge,
                                                   ClaimId::kT1Max,     ClaimId::kT2Min,        ClaimId::kT3Cyclomatic};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view text);

/// Ordered by severity: HOLDS_IN_SCOPE < PARTIAL < REFUTED.
enum class Status { kHoldsInScope, kPartial, kRefuted };

std::string_view to_string(Status s);

/// Everything needed to replay a finding: decode `graphs`, recompute, and the
/// observed fields must come back unchanged.
struct CounterexampleRecord {
  std::string kind;
  std::vector<std::string> graphs;  // graph6
  std::vector<int> mostar;          // Mo of graphs[i]
  std::vector<int> cut_edges;       // bridge count of graphs[i]
  int n = 0;
  int k = 0;
  int mu = 0;
  std::optional<Edge> edge;  // edge-level claims: the offending edge of graphs[0]
  std::optional<int> n_u;
  std::optional<int> n_v;
  std::optional<int> equidistant;
  std::optional<int> imbalance;
  std::vector<int> site;  // transform claims: (u, v) or (p, x)
  std::optional<long long> claimed_value;
  std::string relation;
  std::string note;
};

struct SubclaimVerdict {
  std::string name;
  std::string statement;
  Status status = Status::kHoldsInScope;
  std::uint64_t cells_checked = 0;
  std::uint64_t sites_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t ties = 0;
  std::vector<CounterexampleRecord> counterexamples;
};

/// One (n, k[, mu]) parameter cell of a theorem audit.
struct TheoremCell {
  int n = 0;
  int k = 0;
  std::optional<int> mu;
  std::uint64_t class_size_labeled = 0;
  std::uint64_t optimal_labeled = 0;
  std::optional<int> truth;
  long long bound = 0;
  std::vector<std::string> witnesses;  // canonical graph6
  std::optional<std::string> family_graph;
  std::optional<int> family_mo;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;

  bool empty() const { return class_size_labeled == 0; }
};

struct ClaimVerdict {
  ClaimId claim = ClaimId::kL1Pendant;
  std::string statement;
  std::string scope;
  Status status = Status::kHoldsInScope;
  std::uint64_t cells_checked = 0;
  std::uint64_t sites_checked = 0;
  std::uint64_t violations = 0;
  std::vector<SubclaimVerdict> subclaims;
  std::vector<TheoremCell> cells;

  std::vector<const CounterexampleRecord*> counterexamples() const;
};

/// Sweeps shared between theorem audits; one per order, computed on demand.
class SweepCache {
 public:
  explicit SweepCache(int workers = 0) : workers_(workers) {}
  const enumerate::ClassSweep& get(int n);
  int workers() const { return workers_; }

 private:
  int workers_;
  std::map<int, enumerate::ClassSweep> sweeps_;
};

struct IntRange {
  int lo = 0;
  int hi = -1;  // inclusive
};

/// L1 and L2 over every edge of every labeled connected graph, 1 <= n <= n_max.
std::vector<ClaimVerdict> verify_edge_bound_lemmas(int n_max, int workers = 0);

/// Across every bridge: imbalance = n - 2 s(e) and no tied vertices.
SubclaimVerdict verify_bridge_identity(int n_max, int workers = 0);

/// L3, L4 or L6 over every applicable site, 1 <= n <= n_max.
ClaimVerdict verify_transform_lemma(ClaimId claim, int n_max, int workers = 0);

/// T1, T2 or T3 per parameter cell. Unset k / mu ranges mean "all".
ClaimVerdict verify_theorem(ClaimId claim, IntRange n_range, std::optional<IntRange> k_range = std::nullopt,
                            std::optional<IntRange> mu_range = std::nullopt, int workers = 0,
                            SweepCache* cache = nullptr);

/// L5 checked on the maximizers of every (n, k) cut-edge class.
ClaimVerdict verify_clique_lemma(IntRange n_range, int workers = 0, SweepCache* cache = nullptr);

struct RunConfig {
  int max_n = enumerate::kDefaultMaxOrder;
  std::vector<ClaimId> claims;  // empty: all
  int workers = 0;
};

struct VerificationReport {
  std::string tool;
  std::string version;
  int max_n = 0;
  std::vector<ClaimId> claims;
  std::vector<ClaimVerdict> verdicts;  // ordered by ClaimId
};

/// Throws OutOfRange when max_n is outside 3..order_cap().
VerificationReport run_all(const RunConfig& config);

/// Claim-level status from sub-claims: the most severe one wins.
Status aggregate(const std::vector<SubclaimVerdict>& subclaims);

}  // namespace mostar::verify
