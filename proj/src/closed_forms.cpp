#include "ramsey/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

TuranParams TuranParams::of(int64 k, int64 p) {
  if (k < 1) throw std::invalid_argument("turan: k must be >= 1");
  if (p < 0) throw std::invalid_argument("turan: p must be >= 0");
  return {k, p, mod_euclid(p, k)};
}

int64 turan_count(int64 k, int64 p) {
  TuranParams t = TuranParams::of(k, p);
  // (1 - 1/k)(p^2 - p0^2)/2 + (p0^2 - p0)/2, kept integral as
  // (k-1) q (p + p0) / 2 with q = (p - p0)/k; the product is always even.
  int64 q = (t.p - t.p0) / t.k;
  int64 prod = (t.k - 1) * q * (t.p + t.p0);
  return prod / 2 + t.p0 * (t.p0 - 1) / 2;
}

int64 max_edges_clique_free(int64 p, int64 k) {
  if (k < 2) throw std::invalid_argument("max_edges_clique_free: k must be >= 2");
  if (p < 1) throw std::invalid_argument("max_edges_clique_free: p must be >= 1");
  return turan_count(k - 1, p);
}

int64 extremal_recursion_bound(int64 e_prev, int64 p) {
  if (p <= 2) throw std::invalid_argument("extremal_recursion_bound: p must be > 2");
  if (e_prev < 0) throw std::invalid_argument("extremal_recursion_bound: e_prev must be >= 0");
  return (p * e_prev) / (p - 2);
}

int64 extremal_sparse(int64 n, int64 p) {
  if (n < 3) throw std::invalid_argument("extremal_sparse: n must be >= 3");
  if (p < n) throw std::invalid_argument("extremal_sparse: p must be >= n");
  return ((n - 2) * p) / (n - 1);
}

int64 extremal_dirac(int64 n, int64 m, int64 p) {
  if (m < 1 || n < 2 * m || p < n)
    throw std::invalid_argument("extremal_dirac: need p >= n >= 2m >= 2");
  return turan_count(n - m, p);
}

int64 generalized_ramsey_closed(int64 n, int64 r, int64 k) {
  if (n < 4) throw std::invalid_argument("generalized_ramsey_closed: n must be >= 4");
  if (k < 2) throw std::invalid_argument("generalized_ramsey_closed: k must be >= 2");
  if (r < 1 || r > n - 2)
    throw std::invalid_argument("generalized_ramsey_closed: need 1 <= r <= n-2");
  if (2 * r <= n - 2) return std::max(n, k + r);
  return std::max(n, 2 * k - 2 + floor_div(2 * r + 4 - n, 3));
}

int64 ramsey_closed_max_deficiency(int64 n, int64 k) {
  if (n < 4) throw std::invalid_argument("ramsey_closed_max_deficiency: n must be >= 4");
  if (k < 2) throw std::invalid_argument("ramsey_closed_max_deficiency: k must be >= 2");
  if (n >= 3 * k - 4) return n;
  return 2 * k - 2 + floor_div(n, 3);
}

RecursiveBound ramsey_recursive_bound(int64 r_n_minus_1, int64 r_k_minus_1) {
  return {r_n_minus_1 + r_k_minus_1, r_n_minus_1 % 2 == 0 && r_k_minus_1 % 2 == 0};
}

RamseyQuery RamseyQuery::from_edge_budget(int64 n, int64 r, int64 k, int64 s) {
  RamseyQuery q{n, r, k, s, binom2(n) - r};
  q.validate();
  return q;
}

RamseyQuery RamseyQuery::from_deficiency(int64 n, int64 rStar, int64 k) {
  RamseyQuery q{n, binom2(n) - rStar, k, 1, rStar};
  q.validate();
  return q;
}

RamseyQuery RamseyQuery::classical(int64 n, int64 k) { return from_edge_budget(n, 1, k, 1); }

RamseyQuery RamseyQuery::raw(int64 n, int64 r, int64 k, int64 s) {
  if (n < 2 || k < 2 || r < 1 || s < 1)
    throw std::invalid_argument("RamseyQuery: need n,k >= 2 and r,s >= 1");
  return RamseyQuery{n, r, k, s, binom2(n) - r};
}

void RamseyQuery::validate() const {
  if (n < 2 || k < 2) throw std::invalid_argument("RamseyQuery: need n,k >= 2");
  if (r < 1 || r > binom2(n)) throw std::invalid_argument("RamseyQuery: need 1 <= r <= C(n,2)");
  if (s < 1 || s > binom2(k)) throw std::invalid_argument("RamseyQuery: need 1 <= s <= C(k,2)");
  if (rStar + r != binom2(n)) throw std::invalid_argument("RamseyQuery: rStar + r != C(n,2)");
}

}  // namespace ramsey
