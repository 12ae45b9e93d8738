#include "ramsey/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/closed_forms.hpp"

namespace ramsey {

int Witness::order() const {
  int total = 0;
  for (int c : components) total += c;
  return total;
}

namespace {

Witness make(int64 n, int64 r, int64 k, std::vector<int> comps) {
  std::sort(comps.begin(), comps.end(), std::greater<int>());
  return Witness{std::move(comps), n, r, k};
}

}  // namespace

Witness witness_matching(int64 n, int64 r, int64 k) {
  if (r < 1 || 2 * r > n - 2 || k + r <= n || k <= r)
    throw std::invalid_argument("witness_matching: need 1 <= r, 2r <= n-2, k+r > n, k > r");
  std::vector<int> comps(r, 2);
  comps.insert(comps.end(), k - r - 1, 1);
  return make(n, r, k, std::move(comps));
}

Witness witness_triangles(int64 n, int64 r, int64 k) {
  if (k < 2 || 2 * r < n - 1 || r > n - 2 || r <= 2 * n - 3 * k + 2)
    throw std::invalid_argument("witness_triangles: need 2r >= n-1, r <= n-2, r > 2n-3k+2");
  int64 a = floor_div(2 * r + 1 - n, 3);
  if (a < 0 || a >= k - 1) throw std::logic_error("witness_triangles: component count out of range");
  std::vector<int> comps(a, 3);
  comps.insert(comps.end(), k - 1 - a, 2);
  return make(n, r, k, std::move(comps));
}

Witness witness_trivial_order(int64 n, int64 k) {
  if (n < 4 || k < 2) throw std::invalid_argument("witness_trivial_order: need n >= 4, k >= 2");
  return make(n, /*r*/ 0, k, {static_cast<int>(n - 1)});
}

WitnessCase witness_case(int64 n, int64 r, int64 k) {
  if (n < 4 || k < 2 || r < 1 || r > n - 2)
    throw std::invalid_argument("witness_case: need n >= 4, k >= 2, 1 <= r <= n-2");
  if (2 * r <= n - 2) return k + r > n ? WitnessCase::matching : WitnessCase::trivialOrder;
  return r > 2 * n - 3 * k + 2 ? WitnessCase::triangles : WitnessCase::trivialOrder;
}

Witness best_witness(int64 n, int64 r, int64 k) {
  switch (witness_case(n, r, k)) {
    case WitnessCase::matching: return witness_matching(n, r, k);
    case WitnessCase::triangles: return witness_triangles(n, r, k);
    case WitnessCase::trivialOrder: {
      Witness w = witness_trivial_order(n, k);
      w.r = r;  // vacuously sparse for any r
      return w;
    }
  }
  throw std::logic_error("best_witness: unreachable");
}

Graph turan_graph(int64 p, int64 k) {
  TuranParams t = TuranParams::of(k, p);
  int64 small = t.p / t.k;
  Graph g(static_cast<int>(p));
  // p0 parts of size ceil(p/k), then k-p0 of size floor(p/k)
  std::vector<int> start;
  int at = 0;
  for (int64 i = 0; i < t.k && at < p; ++i) {
    start.push_back(at);
    at += static_cast<int>(i < t.p0 ? small + 1 : small);
  }
  start.push_back(static_cast<int>(p));
  for (size_t a = 0; a + 1 < start.size(); ++a)
    for (int u = start[a]; u < start[a + 1]; ++u)
      for (int v = start[a + 1]; v < p; ++v) g.add_edge(u, v);
  return g;
}

Graph realize(const Witness& w) {
  std::vector<Graph> parts;
  parts.reserve(w.components.size());
  for (int c : w.components) parts.push_back(Graph::complete(c));
  return disjoint_union(parts);
}

std::string component_string(const Witness& w) {
  std::string out;
  size_t i = 0;
  while (i < w.components.size()) {
    size_t j = i;
    while (j < w.components.size() && w.components[j] == w.components[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i);
    out += "K" + std::to_string(w.components[i]);
    i = j;
  }
  return out.empty() ? "empty" : out;
}

bool witness_verification_feasible(const Witness& w) {
  const int order = w.order();
  if (order > kMaxOrder) return false;
  if (order < w.n) return true;  // vacuous sparsity check
  // C(order, n) with early exit
  long double subsets = 1;
  for (int64 i = 1; i <= w.n; ++i) {
    subsets *= static_cast<long double>(order - w.n + i) / i;
    if (subsets > 1e7L) return false;
  }
  return true;
}

WitnessReport verify_witness(const Witness& w) {
  WitnessReport rep;
  Graph g = realize(w);
  rep.order = g.order();
  // A witness with r = 0 claims only the unconditional lower bound R > n-1.
  rep.expectedOrder = w.r >= 1 ? generalized_ramsey_closed(w.n, w.r, w.k) - 1 : w.n - 1;
  rep.orderOk = rep.order == rep.expectedOrder;
  rep.nrVacuous = rep.order < w.n;
  rep.nrOk = rep.nrVacuous || is_nm_graph(g, static_cast<int>(w.n), w.r);
  rep.alpha = independence_number(g);
  rep.alphaOk = rep.alpha == w.k - 1 || (rep.nrVacuous && rep.alpha <= w.k - 1);
  return rep;
}

}  // namespace ramsey
