#pragma once
// Compact exact-graph engine for small simple graphs (order <= 64):
// one 64-bit neighbor set per vertex. Everything downstream (bounds,
// witnesses, the search oracle) works on these values.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/arith.hpp"

namespace ramsey {

inline constexpr int kMaxOrder = 64;

// Sentinel girth for forests; larger than any cycle we can hold.
inline constexpr int kGirthInfinite = 1 << 30;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph complete(int order);
  static Graph edgeless(int order) { return Graph(order); }
  static Graph cycle(int order);
  static Graph path(int order);
  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  uint64_t vertex_mask() const {
    return order_ == 64 ? ~0ull : ((1ull << order_) - 1);
  }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1ull; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int64 edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;
  // Induced subgraph on the set bits of `mask`, relabeled in ascending order.
  Graph induced(uint64_t mask) const;
  // Append one vertex adjacent to the set bits of `nbrs`.
  Graph with_vertex(uint64_t nbrs) const;
  // Delete vertex v; higher labels shift down by one.
  Graph without_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  int order_ = 0;
  std::array<uint64_t, kMaxOrder> adj_{};
};

Graph complement(const Graph& g);
Graph disjoint_union(const std::vector<Graph>& parts);

// Exact independence number by branch and bound on neighbor sets: branch on a
// vertex of maximum degree, either exclude it or take it and delete its
// closed neighborhood.
int independence_number(const Graph& g);
// Decision version with early exit; equivalent to independence_number(g) >= k.
bool has_independent_set(const Graph& g, int k);

struct EdgeExtrema {
  int64 min = 0;
  int64 max = 0;
};
// Min/max induced edge count over all n-vertex subsets.
EdgeExtrema induced_edge_extrema(const Graph& g, int n);
// Every n-subset induces at most m edges. Requires order >= n.
bool is_nm_graph(const Graph& g, int n, int64 m);
// Every k-subset induces at least s edges. Requires order >= k.
bool satisfies_ks_condition(const Graph& g, int k, int64 s);

int girth(const Graph& g);  // kGirthInfinite for forests
bool has_tree_component(const Graph& g);
std::vector<uint64_t> component_masks(const Graph& g);

// Exact canonical form: equal certificates iff isomorphic. The certificate is
// one byte of order followed by the upper-triangle bits of the canonically
// relabeled adjacency matrix, packed 8 per byte in graph6 column order.
using Certificate = std::string;

struct CanonResult {
  Graph graph;       // canonically relabeled copy
  Certificate cert;  // byte string identifying the isomorphism class
};
CanonResult canonicalize(const Graph& g);
Certificate canonical_certificate(const Graph& g);
Graph canonical_form(const Graph& g);

// Standard graph6 text codec (short form, order <= 62). Bit-exact: order byte
// 63+n, then upper-triangle bits in column order packed 6 per byte, each +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace ramsey
