#include "ramsey/soundness.hpp"

#include <bit>
#include <stdexcept>

#include "ramsey/alpha_bounds.hpp"

namespace ramsey {

namespace {

constexpr size_t kMaxSamples = 8;

void record_violation(BoundCheckStats& st, const Graph& g, const std::string& what) {
  ++st.violations;
  if (st.samples.size() < kMaxSamples)
    st.samples.push_back(what + " on " + graph6_encode(g));
}

}  // namespace

void BoundCheckStats::absorb(const BoundCheckStats& o) {
  applicablePairs += o.applicablePairs;
  violations += o.violations;
  for (const auto& s : o.samples)
    if (samples.size() < kMaxSamples) samples.push_back(s);
}

void check_graph_bounds(const Graph& g, BoundCheckStats& st) {
  const int p = g.order();
  if (p < 1) return;
  if (p > 14) throw std::invalid_argument("check_graph_bounds: order too large");

  const int64 e = g.edge_count();
  const int alpha = independence_number(g);

  // Per-size induced edge extrema in one subset sweep.
  std::vector<int64> minInd(p + 1, 0), maxInd(p + 1, 0);
  for (int n = 2; n <= p; ++n) {
    EdgeExtrema ex = induced_edge_extrema(g, n);
    minInd[n] = ex.min;
    maxInd[n] = ex.max;
  }

  // Sparse-subgraph threshold, p >= n > k >= 1.
  for (int n = 2; n <= p; ++n) {
    for (int k = 1; k < n; ++k) {
      BoundResult b = sparse_subgraph_threshold(p, k, n);
      if (e < b.edgeThreshold) {
        ++st.applicablePairs;
        if (minInd[n] > b.conclusion)
          record_violation(st, g, "sparse-subgraph n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }

  if (p >= 4) {
    // minus-t family on its applicability domain (empty past t ~ p/4).
    for (int64 t = 0; t <= p; ++t) {
      BoundResult b = alpha_bound_minus_t(p, t);
      if (b.applicable && e < b.edgeThreshold) {
        ++st.applicablePairs;
        if (alpha < b.conclusion)
          record_violation(st, g, "alpha-minus t=" + std::to_string(t));
      }
    }
    // plus-t family, t in {0,1,2,3}.
    for (int64 t = 0; t <= 3; ++t) {
      BoundResult b = alpha_bound_plus_t(p, t);
      if (b.applicable && e < b.edgeThreshold) {
        ++st.applicablePairs;
        if (alpha < b.conclusion)
          record_violation(st, g, "alpha-plus t=" + std::to_string(t));
      }
    }
  }
  // fixed shifts at their order minima
  const FixedShift shifts[] = {FixedShift::zero, FixedShift::one, FixedShift::two};
  const int shiftMin[] = {9, 5, 4};
  for (int i = 0; i < 3; ++i) {
    if (p < shiftMin[i]) continue;
    BoundResult b = alpha_bound_fixed_shift(p, shifts[i]);
    if (e < b.edgeThreshold) {
      ++st.applicablePairs;
      if (alpha < b.conclusion)
        record_violation(st, g, "alpha-fixed shift=" + std::to_string(i));
    }
  }

  // half bound over all (n,t) with t <= n/2+2, p > n+7-2t.
  for (int64 n = 1; n <= p; ++n) {
    for (int64 t = 1; 2 * t <= n + 4; ++t) {
      if (p <= n + 7 - 2 * t) continue;
      BoundResult b = alpha_bound_half(p, n, t);
      if (e < b.edgeThreshold) {
        ++st.applicablePairs;
        if (alpha < b.conclusion)
          record_violation(st, g, "alpha-half n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
  }

  // (n,m)-family floors; hypothesis is membership in the family.
  for (int n = 4; n <= p; ++n) {
    for (int64 m = 1; 2 * m <= n - 2; ++m) {
      if (maxInd[n] <= m) {
        ++st.applicablePairs;
        if (alpha < nm_graph_alpha_floor(p, n, m))
          record_violation(st, g, "nm-floor n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  for (int n = 4; n <= p; ++n) {
    for (int64 t = 2; 2 * t <= n + 4; ++t) {
      const int64 m = n - t;
      if (m < 0) continue;
      if (maxInd[n] <= m) {
        ++st.applicablePairs;
        if (alpha < nm_graph_alpha_half(p, n, t))
          record_violation(st, g, "nm-half n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
  }
}

}  // namespace ramsey
