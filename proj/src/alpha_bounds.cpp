#include "ramsey/alpha_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

BoundResult sparse_subgraph_threshold(int64 p, int64 k, int64 n) {
  if (k < 1 || n <= k || p < n)
    throw std::invalid_argument("sparse_subgraph_threshold: need p >= n > k >= 1");
  int64 s = p / k;
  int64 threshold = s * p - s * (s + 1) / 2 * k;
  int64 q = n / k;
  int64 prod = q * (2 * n - (q + 1) * k);  // always even
  return {true, threshold, prod / 2 - 1, BoundKind::sparseSubgraph};
}

BoundResult alpha_bound_minus_t(int64 p, int64 t) {
  if (p < 4) throw std::invalid_argument("alpha_bound_minus_t: p must be >= 4");
  if (t < 0) throw std::invalid_argument("alpha_bound_minus_t: t must be >= 0");
  int64 rho = mod_euclid(p - t, 3);  // 3{(p-t)/3}
  BoundResult out;
  out.applicable = 4 * (t + rho) < p;  // t < p/4 - rho cleared
  out.edgeThreshold = p + 2 * t + 2 * rho;
  out.conclusion = floor_div(p - t, 3) + 1;
  out.kind = BoundKind::alphaLowerBound;
  return out;
}

BoundResult alpha_bound_plus_t(int64 p, int64 t) {
  if (p < 4) throw std::invalid_argument("alpha_bound_plus_t: p must be >= 4");
  if (t < 0) throw std::invalid_argument("alpha_bound_plus_t: t must be >= 0");
  int64 sg = mod_euclid(p + t, 3);  // 3{(p+t)/3}
  BoundResult out;
  out.applicable = (4 * sg - p < 4 * t) && (2 * t <= p + 2 * sg);
  out.edgeThreshold = p - 2 * t + sg + std::max(t, sg);
  out.conclusion = floor_div(p + t, 3) + 1;
  out.kind = BoundKind::alphaLowerBound;
  return out;
}

BoundResult alpha_bound_fixed_shift(int64 p, FixedShift shift) {
  BoundResult out;
  out.kind = BoundKind::alphaLowerBound;
  out.applicable = true;
  int64 rem = mod_euclid(p, 3);
  switch (shift) {
    case FixedShift::zero:
      if (p < 9) throw std::invalid_argument("alpha_bound_fixed_shift: zero needs p >= 9");
      out.edgeThreshold = p + 2 * rem;
      out.conclusion = floor_div(p, 3) + 1;
      break;
    case FixedShift::one:
      if (p < 5) throw std::invalid_argument("alpha_bound_fixed_shift: one needs p >= 5");
      out.edgeThreshold = rem == 0 ? p : (rem == 1 ? p + 2 : p - 1);
      out.conclusion = floor_div(p + 1, 3) + 1;
      break;
    case FixedShift::two:
      if (p < 4) throw std::invalid_argument("alpha_bound_fixed_shift: two needs p >= 4");
      out.edgeThreshold = rem == 0 ? p : (rem == 1 ? p - 2 : p - 1);
      out.conclusion = floor_div(p + 2, 3) + 1;
      break;
  }
  return out;
}

BoundResult alpha_bound_half(int64 p, int64 n, int64 t) {
  if (n < 1 || t < 1 || 2 * t > n + 4 || p <= n + 7 - 2 * t)
    throw std::invalid_argument("alpha_bound_half: need 1 <= t <= n/2+2 and p > n+7-2t");
  int64 cleared = p + n + 2 - 2 * t;  // contract: 2 e(G) < cleared
  BoundResult out;
  out.applicable = true;
  out.edgeThreshold = (cleared + 1) / 2;
  out.conclusion = floor_div(p - floor_div(n + 4 - 2 * t, 3), 2) + 1;
  out.kind = BoundKind::alphaLowerBound;
  return out;
}

int64 nm_graph_alpha_floor(int64 p, int64 n, int64 m) {
  if (n < 4 || p < n || m < 1 || 2 * m > n - 2)
    throw std::invalid_argument("nm_graph_alpha_floor: need p >= n >= 4 and 1 <= m <= n/2-1");
  return p - m;
}

int64 nm_graph_alpha_half(int64 p, int64 n, int64 t) {
  if (n < 4 || p < n || t < 2 || 2 * t > n + 4)
    throw std::invalid_argument("nm_graph_alpha_half: need p >= n >= 4 and 2 <= t <= n/2+2");
  return floor_div(p - floor_div(n + 4 - 2 * t, 3), 2) + 1;
}

}  // namespace ramsey
