#pragma once
// Exhaustive soundness pass: evaluate every edge-threshold bound instance
// that applies to a given graph and verify its conclusion against the exact
// independence number / induced-subgraph extrema.

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct BoundCheckStats {
  uint64_t applicablePairs = 0;  // (graph, bound instance) pairs whose hypothesis held
  uint64_t violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions

  void absorb(const BoundCheckStats& o);
};

// Checks all bound families on their stated domains for one graph of order
// <= 14. Instance parameters n are capped at the graph order (larger n only
// weakens the conclusions).
void check_graph_bounds(const Graph& g, BoundCheckStats& st);

}  // namespace ramsey
