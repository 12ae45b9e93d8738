#include "ramsey/graph.hpp"

#include <cassert>
#include <climits>
#include <stdexcept>

namespace ramsey {

namespace {

constexpr uint64_t bit(int v) { return 1ull << v; }

void check_vertex(const Graph& g, int v, const char* who) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) throw std::invalid_argument("Graph: order must be in [0,64]");
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int order) {
  Graph g(order);
  if (order < 3) throw std::invalid_argument("cycle: order must be >= 3");
  for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph Graph::path(int order) {
  Graph g(order);
  for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u, "add_edge");
  check_vertex(*this, v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: no self-loops");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u, "remove_edge");
  check_vertex(*this, v, "remove_edge");
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int64 Graph::edge_count() const {
  int64 twice = 0;
  for (int v = 0; v < order_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    uint64_t above = adj_[u] >> (u + 1);
    while (above) {
      int v = u + 1 + std::countr_zero(above);
      out.emplace_back(u, v);
      above &= above - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(order_);
  const uint64_t all = vertex_mask();
  for (int v = 0; v < order_; ++v) g.adj_[v] = ~adj_[v] & all & ~bit(v);
  return g;
}

Graph Graph::induced(uint64_t mask) const {
  mask &= vertex_mask();
  std::array<int, kMaxOrder> map{};
  int n = 0;
  for (uint64_t m = mask; m; m &= m - 1) map[n++] = std::countr_zero(m);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (has_edge(map[a], map[b])) g.add_edge(a, b);
  return g;
}

Graph Graph::with_vertex(uint64_t nbrs) const {
  if (order_ >= kMaxOrder) throw std::invalid_argument("with_vertex: order would exceed 64");
  if (nbrs & ~vertex_mask()) throw std::invalid_argument("with_vertex: neighbor set out of range");
  Graph g = *this;
  g.order_ = order_ + 1;
  g.adj_[order_] = nbrs;
  for (uint64_t m = nbrs; m; m &= m - 1) g.adj_[std::countr_zero(m)] |= bit(order_);
  return g;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(*this, v, "without_vertex");
  Graph g(order_ - 1);
  for (int u = 0; u < order_; ++u) {
    if (u == v) continue;
    uint64_t row = adj_[u];
    uint64_t low = row & (bit(v) - 1);
    uint64_t high = (row >> (v + 1)) << v;
    g.adj_[u < v ? u : u - 1] = low | high;
  }
  return g;
}

Graph complement(const Graph& g) { return g.complement(); }

Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxOrder) throw std::invalid_argument("disjoint_union: total order exceeds 64");
  Graph g(total);
  int off = 0;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
    off += p.order();
  }
  return g;
}

namespace {

void alpha_search(const Graph& g, uint64_t rem, int cur, int& best) {
  int cnt = std::popcount(rem);
  if (cur + cnt <= best) return;
  if (rem == 0) {
    best = cur;
    return;
  }
  int v = -1, dmax = -1;
  int64 dsum = 0;
  for (uint64_t m = rem; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int d = std::popcount(g.neighbors(u) & rem);
    dsum += d;
    if (d > dmax) {
      dmax = d;
      v = u;
    }
  }
  if (dmax <= 1) {
    // only K1/K2 components left: take all isolated vertices, one per edge
    int val = cur + cnt - static_cast<int>(dsum / 2);
    if (val > best) best = val;
    return;
  }
  alpha_search(g, rem & ~(g.neighbors(v) | bit(v)), cur + 1, best);
  alpha_search(g, rem & ~bit(v), cur, best);
}

bool indep_at_least(const Graph& g, uint64_t rem, int cur, int k) {
  if (cur >= k) return true;
  int cnt = std::popcount(rem);
  if (cur + cnt < k) return false;
  int v = -1, dmax = -1;
  int64 dsum = 0;
  for (uint64_t m = rem; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int d = std::popcount(g.neighbors(u) & rem);
    dsum += d;
    if (d > dmax) {
      dmax = d;
      v = u;
    }
  }
  if (dmax <= 1) return cur + cnt - static_cast<int>(dsum / 2) >= k;
  return indep_at_least(g, rem & ~(g.neighbors(v) | bit(v)), cur + 1, k) ||
         indep_at_least(g, rem & ~bit(v), cur, k);
}

int64 subset_edges(const Graph& g, uint64_t sub) {
  int64 e = 0;
  for (uint64_t m = sub; m; m &= m - 1) {
    int v = std::countr_zero(m);
    e += std::popcount(g.neighbors(v) & sub & (bit(v) - 1));
  }
  return e;
}

// Gosper's hack: next subset with the same popcount, or 0 past the top one.
uint64_t next_combination(uint64_t sub, uint64_t top) {
  if (sub == top) return 0;
  uint64_t c = sub & (~sub + 1);
  uint64_t r = sub + c;
  return (((r ^ sub) >> 2) / c) | r;
}

}  // namespace

int independence_number(const Graph& g) {
  int best = 0;
  alpha_search(g, g.vertex_mask(), 0, best);
  return best;
}

bool has_independent_set(const Graph& g, int k) {
  if (k <= 0) return true;
  return indep_at_least(g, g.vertex_mask(), 0, k);
}

EdgeExtrema induced_edge_extrema(const Graph& g, int n) {
  if (n < 0 || n > g.order()) throw std::invalid_argument("induced_edge_extrema: n out of range");
  if (n < 2) return {0, 0};
  const int64 full = binom2(n);
  const uint64_t first = (n == 64) ? ~0ull : ((1ull << n) - 1);
  const uint64_t top = first << (g.order() - n);
  int64 lo = LLONG_MAX, hi = -1;
  for (uint64_t sub = first; sub; sub = next_combination(sub, top)) {
    int64 e = subset_edges(g, sub);
    if (e < lo) lo = e;
    if (e > hi) hi = e;
    if (lo == 0 && hi == full) break;
  }
  return {lo, hi};
}

bool is_nm_graph(const Graph& g, int n, int64 m) {
  if (n < 1) throw std::invalid_argument("is_nm_graph: n must be >= 1");
  if (g.order() < n) throw std::invalid_argument("is_nm_graph: order < n");
  if (n < 2) return m >= 0;
  const uint64_t first = (n == 64) ? ~0ull : ((1ull << n) - 1);
  const uint64_t top = first << (g.order() - n);
  for (uint64_t sub = first; sub; sub = next_combination(sub, top))
    if (subset_edges(g, sub) > m) return false;
  return true;
}

bool satisfies_ks_condition(const Graph& g, int k, int64 s) {
  if (k < 1) throw std::invalid_argument("satisfies_ks_condition: k must be >= 1");
  if (g.order() < k) throw std::invalid_argument("satisfies_ks_condition: order < k");
  if (k < 2) return s <= 0;
  const uint64_t first = (k == 64) ? ~0ull : ((1ull << k) - 1);
  const uint64_t top = first << (g.order() - k);
  for (uint64_t sub = first; sub; sub = next_combination(sub, top))
    if (subset_edges(g, sub) < s) return false;
  return true;
}

namespace {

// Shortest u-v path length with the edge uv removed, or INT_MAX.
int dist_without_edge(const Graph& g, int u, int v) {
  uint64_t visited = bit(u), frontier = bit(u);
  int d = 0;
  while (frontier) {
    ++d;
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1) {
      int w = std::countr_zero(m);
      uint64_t nb = g.neighbors(w);
      if (w == u) nb &= ~bit(v);
      if (w == v) nb &= ~bit(u);
      next |= nb;
    }
    next &= ~visited;
    if (next & bit(v)) return d;
    visited |= next;
    frontier = next;
  }
  return INT_MAX;
}

}  // namespace

int girth(const Graph& g) {
  int best = kGirthInfinite;
  for (auto [u, v] : g.edges()) {
    int d = dist_without_edge(g, u, v);
    if (d != INT_MAX && d + 1 < best) best = d + 1;
    if (best == 3) break;
  }
  return best;
}

std::vector<uint64_t> component_masks(const Graph& g) {
  std::vector<uint64_t> out;
  uint64_t left = g.vertex_mask();
  while (left) {
    uint64_t comp = bit(std::countr_zero(left));
    uint64_t frontier = comp;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool has_tree_component(const Graph& g) {
  for (uint64_t comp : component_masks(g)) {
    int64 twice = 0;
    for (uint64_t m = comp; m; m &= m - 1) twice += std::popcount(g.neighbors(std::countr_zero(m)) & comp);
    if (twice / 2 == std::popcount(comp) - 1) return true;
  }
  return false;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6_encode: order > 62 needs the long form");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw std::invalid_argument("graph6_decode: byte outside [63,126]");
  const int n = text[0] - 63;
  if (n > 62) throw std::invalid_argument("graph6_decode: order > 62 unsupported");
  const int64 bits = binom2(n);
  const size_t expect = 1 + static_cast<size_t>((bits + 5) / 6);
  if (text.size() != expect) throw std::invalid_argument("graph6_decode: malformed length");
  Graph g(n);
  int64 idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++idx) {
      int byte = text[1 + idx / 6] - 63;
      if ((byte >> (5 - idx % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (int64 k = bits; k < static_cast<int64>(text.size() - 1) * 6; ++k) {
    int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) throw std::invalid_argument("graph6_decode: nonzero padding");
  }
  return g;
}

}  // namespace ramsey
