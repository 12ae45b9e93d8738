#pragma once
// Exhaustive isomorph-free enumeration by canonical augmentation, with
// pluggable hereditary pruning, and brute-force recomputation of extremal
// edge counts, minimum independence numbers and generalized Ramsey numbers.

#include <functional>
#include <optional>
#include <string>

#include "ramsey/closed_forms.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr int kMaxEnumOrder = 11;      // hard budget cap
inline constexpr int kDefaultOracleBudget = 10;

struct EnumerationStats {
  int order = 0;
  uint64_t graphsVisited = 0;        // candidate one-vertex extensions examined
  uint64_t graphsAfterFilter = 0;    // isomorphism classes delivered at the target order
  uint64_t prunedByDegreeBounds = 0;
  double elapsedMs = 0.0;
  void absorb(const EnumerationStats& o) {
    graphsVisited += o.graphsVisited;
    graphsAfterFilter += o.graphsAfterFilter;
    prunedByDegreeBounds += o.prunedByDegreeBounds;
  }
};

// The filter must be hereditary: a graph that fails it may not gain the
// property back by adding vertices or edges (equivalently, every induced
// subgraph of a passing graph passes). Callers with non-hereditary
// predicates pass nullptr and filter in the visitor.
using GraphFilter = std::function<bool(const Graph&)>;
using GraphVisitor = std::function<void(const Graph&)>;

// Yields exactly one canonical representative per isomorphism class of
// graphs of the given order that pass the filter, in a deterministic order.
EnumerationStats enumerate_graphs(int order, const GraphFilter& filter, const GraphVisitor& visit);

// Same classes; the visitor is invoked concurrently from worker threads.
EnumerationStats enumerate_graphs_parallel(int order, const GraphFilter& filter, int jobs,
                                           const GraphVisitor& visit);

struct OracleVerdict {
  std::optional<int64> value;            // empty: exceeds budget
  std::optional<std::string> witnessG6;  // extremal/critical graph, canonical graph6
  EnumerationStats stats;
  bool exceeds_budget() const { return !value.has_value(); }
};

struct EnumOptions {
  int jobs = 1;
  // Called once per surviving graph, serialized under the reduction lock.
  GraphVisitor inspect;
};

// Max e(G) over graphs of order p whose every n-subset induces <= m edges
// (graphs of order < n qualify vacuously). p >= n.
OracleVerdict brute_extremal_e(int n, int64 m, int p, const EnumOptions& opts = {});

// Min alpha(G) over the same family. p >= n.
OracleVerdict brute_alpha_min(int n, int64 m, int p, const EnumOptions& opts = {});

// Max e(G) over graphs of order p with girth > n. p >= n >= 3.
OracleVerdict brute_girth_extremal(int n, int p, const EnumOptions& opts = {});

// Smallest p <= pMax such that no graph of order p defeats both clauses of
// the defining property; the witness certificate is a critical graph of
// order value-1 (or of order pMax when the budget is exceeded).
OracleVerdict brute_generalized_ramsey(const RamseyQuery& q, int pMax = kDefaultOracleBudget,
                                       const EnumOptions& opts = {});

// Degree interval every counterexample vertex must land in, given the two
// neighboring Ramsey values.
struct DegreeBounds {
  int64 lo;
  int64 hi;
};
DegreeBounds degree_prune_bounds(int64 p, int64 rSubK, int64 rSubN);

// Independent cross-check: count isomorphism classes of order p by scanning
// all 2^C(p,2) labeled graphs and deduplicating certificates. p <= 7.
uint64_t bitmask_class_count(int p, int jobs = 1);

}  // namespace ramsey
