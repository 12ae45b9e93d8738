#pragma once
// Extremal lower-bound graphs for the closed formula: disjoint unions of
// complete components K1/K2/K3 realizing order R(n,.;k,1) - 1, plus the
// balanced complete multipartite (Turán) graph.

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct Witness {
  std::vector<int> components;  // complete-component sizes, descending
  int64 n = 0, r = 0, k = 0;    // claimed parameters, deficiency convention
  int order() const;
  int alpha() const { return static_cast<int>(components.size()); }
};

// r K2 + (k-r-1) K1; needs 2r <= n-2, k+r > n, k > r.
Witness witness_matching(int64 n, int64 r, int64 k);

// a K3 + (k-1-a) K2 with a = floor((2r+1-n)/3); needs 2r >= n-1, r <= n-2,
// r > 2n-3k+2.
Witness witness_triangles(int64 n, int64 r, int64 k);

// K_{n-1}: vacuously sparse at order n-1 and alpha = 1.
Witness witness_trivial_order(int64 n, int64 k);

enum class WitnessCase { matching, triangles, trivialOrder };
WitnessCase witness_case(int64 n, int64 r, int64 k);
Witness best_witness(int64 n, int64 r, int64 k);

// Balanced complete k-partite graph on p vertices.
Graph turan_graph(int64 p, int64 k);

// Vertices numbered component by component in decreasing size.
Graph realize(const Witness& w);
std::string component_string(const Witness& w);  // e.g. "K3 + 2K2"

struct WitnessReport {
  bool orderOk = false;
  bool nrOk = false;
  bool nrVacuous = false;  // order < n, sparsity holds vacuously
  bool alphaOk = false;
  int order = 0;
  int64 expectedOrder = 0;
  int alpha = 0;
  bool pass() const { return orderOk && nrOk && alphaOk; }
};
WitnessReport verify_witness(const Witness& w);

// The sparsity check enumerates C(order, n) subsets; callers outside the
// desk-scale grids should consult this before verifying.
bool witness_verification_feasible(const Witness& w);

}  // namespace ramsey
