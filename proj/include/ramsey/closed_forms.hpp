#pragma once
// Pure integer evaluators for the closed formulas: Turán counts, extremal
// edge counts of sparse-constrained graphs, the generalized Ramsey formula
// and its recursive bound. Exact integer arithmetic throughout; out-of-domain
// parameters throw std::invalid_argument.

#include "ramsey/arith.hpp"

namespace ramsey {

struct TuranParams {
  int64 k;   // number of parts
  int64 p;   // order
  int64 p0;  // least nonnegative residue of p mod k
  static TuranParams of(int64 k, int64 p);
};

// Query parameters for R(n,r;k,s). r is the edge budget of the defining
// convention (some subgraph on n vertices has at most r-1 edges); rStar is
// the deficiency convention with r + rStar = C(n,2). The closed formula is
// stated in terms of rStar.
struct RamseyQuery {
  int64 n = 0, r = 0, k = 0, s = 1, rStar = 0;
  static RamseyQuery from_edge_budget(int64 n, int64 r, int64 k, int64 s);
  static RamseyQuery from_deficiency(int64 n, int64 rStar, int64 k);
  static RamseyQuery classical(int64 n, int64 k);  // r = s = 1
  // Definition-literal query without the edge-budget range checks; used for
  // recursive comparisons where r may exceed C(n-1,2).
  static RamseyQuery raw(int64 n, int64 r, int64 k, int64 s);
  void validate() const;
};

// t_k(p): edge count of the balanced complete k-partite graph on p vertices.
int64 turan_count(int64 k, int64 p);

// ex(p; K_k) = t_{k-1}(p).
int64 max_edges_clique_free(int64 p, int64 k);

// floor(p * e_prev / (p-2)): upper bound on an extremal count at order p
// given the value e_prev at order p-1.
int64 extremal_recursion_bound(int64 e_prev, int64 p);

// e(n, n-2; p) = floor((n-2) p / (n-1)).
int64 extremal_sparse(int64 n, int64 p);

// e(n, C(n,2)-m; p) = t_{n-m}(p) for p >= n >= 2m >= 2.
int64 extremal_dirac(int64 n, int64 m, int64 p);

// R(n, n(n-1)/2 - r; k, 1) for n >= 4, 1 <= r <= n-2, k >= 2 (r in the
// deficiency convention). The case split "r <= n/2 - 1" is evaluated as the
// integer test 2r <= n-2.
int64 generalized_ramsey_closed(int64 n, int64 r, int64 k);

// Specialization at the maximal deficiency r = n-2.
int64 ramsey_closed_max_deficiency(int64 n, int64 k);

struct RecursiveBound {
  int64 bound;
  bool strict;  // the bound improves to bound-1 when both inputs are even
};
RecursiveBound ramsey_recursive_bound(int64 r_n_minus_1, int64 r_k_minus_1);

}  // namespace ramsey
