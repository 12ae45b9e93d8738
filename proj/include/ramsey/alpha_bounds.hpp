#pragma once
// Edge-threshold conclusions for graphs of order p: when e(G) falls below a
// threshold, either the independence number is bounded from below or some
// n-subset is guaranteed to be sparse. Applicability conditions sit at exact
// rational boundaries, so every test is cleared of denominators and decided
// in integers.

#include "ramsey/arith.hpp"

namespace ramsey {

enum class BoundKind { alphaLowerBound, sparseSubgraph };

struct BoundResult {
  bool applicable = false;
  // The conclusion holds whenever e(G) < edgeThreshold.
  int64 edgeThreshold = 0;
  // Guaranteed alpha lower bound, or the edge budget of a guaranteed sparse
  // n-subset, depending on kind. Only meaningful when applicable.
  int64 conclusion = 0;
  BoundKind kind = BoundKind::alphaLowerBound;
};

// e(G) < floor(p/k) p - floor(p/k)(floor(p/k)+1) k / 2 forces an n-subset
// with at most floor(n/k)(n - (floor(n/k)+1) k / 2) - 1 edges. p >= n > k >= 1.
BoundResult sparse_subgraph_threshold(int64 p, int64 k, int64 n);

// alpha(G) >= floor((p-t)/3) + 1 when e(G) < p + 2t + 6{(p-t)/3}, applicable
// for t < p/4 - 3{(p-t)/3}. p >= 4, t >= 0.
BoundResult alpha_bound_minus_t(int64 p, int64 t);

// alpha(G) >= floor((p+t)/3) + 1 when e(G) < p - 2t + 3{(p+t)/3} +
// max{t, 3{(p+t)/3}}, applicable for 3{(p+t)/3} - p/4 < t <= p/2 + 3{(p+t)/3}.
BoundResult alpha_bound_plus_t(int64 p, int64 t);

// The t = 0,1,2 specializations of alpha_bound_plus_t with their piecewise
// thresholds written out by residue of p mod 3.
enum class FixedShift { zero, one, two };
BoundResult alpha_bound_fixed_shift(int64 p, FixedShift shift);

// alpha(G) >= floor((p - floor((n+4-2t)/3))/2) + 1 when 2 e(G) < p+n+2-2t.
// The stored edgeThreshold is ceil((p+n+2-2t)/2), which makes the integer
// comparison e < edgeThreshold exactly the cleared inequality.
// Requires t >= 1, t <= n/2 + 2, p > n + 7 - 2t.
BoundResult alpha_bound_half(int64 p, int64 n, int64 t);

// Guaranteed alpha of any graph of order p in which every n-subset induces at
// most m edges, for p >= n >= 4 and 2m <= n-2: alpha >= p - m.
int64 nm_graph_alpha_floor(int64 p, int64 n, int64 m);

// Same for budget n-t with 2 <= t <= n/2 + 2:
// alpha >= floor((p - floor((n+4-2t)/3))/2) + 1.
int64 nm_graph_alpha_half(int64 p, int64 n, int64 t);

}  // namespace ramsey
