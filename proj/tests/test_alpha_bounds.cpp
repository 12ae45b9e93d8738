#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/alpha_bounds.hpp"
#include "ramsey/closed_forms.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/soundness.hpp"
#include "ramsey/witnesses.hpp"
#include "test_util.hpp"

using namespace ramsey;

TEST_CASE("sparse subgraph threshold") {
  BoundResult b = sparse_subgraph_threshold(9, 3, 4);
  CHECK(b.edgeThreshold == 9);
  CHECK(b.conclusion == 0);
  CHECK(b.kind == BoundKind::sparseSubgraph);

  b = sparse_subgraph_threshold(6, 3, 6);
  CHECK(b.edgeThreshold == 3);
  CHECK(b.conclusion == 2);

  b = sparse_subgraph_threshold(4, 1, 4);
  CHECK(b.edgeThreshold == 6);
  CHECK(b.conclusion == 5);

  CHECK_THROWS_AS(sparse_subgraph_threshold(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(sparse_subgraph_threshold(5, 4, 4), std::invalid_argument);

  // threshold and conclusion are complements of Turan counts
  for (int p = 2; p <= 30; ++p)
    for (int n = 2; n <= p; ++n)
      for (int k = 1; k < n; ++k) {
        BoundResult r = sparse_subgraph_threshold(p, k, n);
        CHECK(r.edgeThreshold == binom2(p) - turan_count(k, p));
        CHECK(r.conclusion == binom2(n) - turan_count(k, n) - 1);
      }
}

TEST_CASE("alpha bound, minus-t family") {
  BoundResult b = alpha_bound_minus_t(9, 0);
  CHECK(b.applicable);
  CHECK(b.edgeThreshold == 9);
  CHECK(b.conclusion == 4);

  b = alpha_bound_minus_t(8, 0);  // boundary of the strict inequality
  CHECK_FALSE(b.applicable);

  b = alpha_bound_minus_t(13, 1);
  CHECK(b.applicable);
  CHECK(b.edgeThreshold == 15);
  CHECK(b.conclusion == 5);

  CHECK_THROWS_AS(alpha_bound_minus_t(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_bound_minus_t(9, -1), std::invalid_argument);
}

TEST_CASE("alpha bound, plus-t family") {
  BoundResult b = alpha_bound_plus_t(9, 0);
  CHECK(b.applicable);
  CHECK(b.edgeThreshold == 9);
  CHECK(b.conclusion == 4);

  b = alpha_bound_plus_t(7, 1);
  CHECK(b.applicable);
  CHECK(b.edgeThreshold == 9);
  CHECK(b.conclusion == 3);

  b = alpha_bound_plus_t(5, 2);
  CHECK(b.applicable);
  CHECK(b.edgeThreshold == 4);
  CHECK(b.conclusion == 3);
}

TEST_CASE("fixed shifts agree with the plus-t family") {
  BoundResult b = alpha_bound_fixed_shift(10, FixedShift::zero);
  CHECK(b.edgeThreshold == 12);
  CHECK(b.conclusion == 4);
  b = alpha_bound_fixed_shift(7, FixedShift::one);
  CHECK(b.edgeThreshold == 9);
  CHECK(b.conclusion == 3);
  b = alpha_bound_fixed_shift(6, FixedShift::two);
  CHECK(b.edgeThreshold == 6);
  CHECK(b.conclusion == 3);

  const FixedShift shifts[] = {FixedShift::zero, FixedShift::one, FixedShift::two};
  const int mins[] = {9, 5, 4};
  for (int t = 0; t <= 2; ++t) {
    for (int p = mins[t]; p <= 100; ++p) {
      BoundResult fixed = alpha_bound_fixed_shift(p, shifts[t]);
      BoundResult general = alpha_bound_plus_t(p, t);
      CHECK(general.applicable);
      CHECK(fixed.edgeThreshold == general.edgeThreshold);
      CHECK(fixed.conclusion == general.conclusion);
    }
  }
  CHECK_THROWS_AS(alpha_bound_fixed_shift(8, FixedShift::zero), std::invalid_argument);
  CHECK_THROWS_AS(alpha_bound_fixed_shift(4, FixedShift::one), std::invalid_argument);
  CHECK_THROWS_AS(alpha_bound_fixed_shift(3, FixedShift::two), std::invalid_argument);
}

TEST_CASE("alpha bound, half family") {
  BoundResult b = alpha_bound_half(7, 5, 3);
  CHECK(b.conclusion == 4);
  // contract is the cleared inequality 2e < p+n+2-2t = 8
  CHECK(b.edgeThreshold == 4);

  b = alpha_bound_half(8, 6, 4);
  CHECK(b.edgeThreshold == 4);
  CHECK(b.conclusion == 5);

  b = alpha_bound_half(10, 4, 4);
  CHECK(b.edgeThreshold == 4);
  CHECK(b.conclusion == 6);

  CHECK_THROWS_AS(alpha_bound_half(7, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_bound_half(7, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(alpha_bound_half(6, 5, 3), std::invalid_argument);  // p <= n+7-2t

  // integer threshold encodes the half-integral cut exactly
  for (int n = 1; n <= 12; ++n)
    for (int t = 1; 2 * t <= n + 4; ++t)
      for (int p = n + 8 - 2 * t; p <= n + 20; ++p) {
        if (p < 1) continue;
        BoundResult r = alpha_bound_half(p, n, t);
        for (int64 e = 0; e <= p + n + 4; ++e)
          CHECK((e < r.edgeThreshold) == (2 * e < p + n + 2 - 2 * t));
      }
}

TEST_CASE("alpha floors for sparse families") {
  CHECK(nm_graph_alpha_floor(8, 6, 2) == 6);
  CHECK(nm_graph_alpha_floor(4, 4, 1) == 3);
  CHECK(nm_graph_alpha_floor(10, 10, 4) == 6);
  CHECK_THROWS_AS(nm_graph_alpha_floor(8, 6, 3), std::invalid_argument);

  CHECK(nm_graph_alpha_half(6, 5, 3) == 3);
  CHECK(nm_graph_alpha_half(4, 4, 2) == 2);
  CHECK(nm_graph_alpha_half(7, 6, 4) == 4);
  CHECK_THROWS_AS(nm_graph_alpha_half(6, 5, 1), std::invalid_argument);

  // 4K2 u 2K1 attains the floor exactly at (p,n,m) = (10,10,4)
  Graph g = disjoint_union({Graph::complete(2), Graph::complete(2), Graph::complete(2),
                            Graph::complete(2), Graph(1), Graph(1)});
  CHECK(is_nm_graph(g, 10, 4));
  CHECK(independence_number(g) == 6);

  // 3K2 attains the half floor at (6,5,3)
  Graph m3 = disjoint_union({Graph::complete(2), Graph::complete(2), Graph::complete(2)});
  CHECK(is_nm_graph(m3, 5, 2));
  CHECK(independence_number(m3) == nm_graph_alpha_half(6, 5, 3));

  // rK2 u (p-2r)K1 attains p-r whenever 2r <= n-2
  for (int n = 4; n <= 8; ++n)
    for (int r = 1; 2 * r <= n - 2; ++r)
      for (int p = n; p <= 10; ++p) {
        if (2 * r > p) continue;
        std::vector<Graph> parts(r, Graph::complete(2));
        parts.insert(parts.end(), p - 2 * r, Graph(1));
        Graph w = disjoint_union(parts);
        CHECK(is_nm_graph(w, n, r));
        CHECK(independence_number(w) == p - r);
        CHECK(nm_graph_alpha_floor(p, n, r) == p - r);
      }
}

TEST_CASE("purity: evaluating twice yields identical results") {
  for (int p = 4; p <= 20; ++p)
    for (int t = 0; t <= 4; ++t) {
      BoundResult a = alpha_bound_minus_t(p, t), b = alpha_bound_minus_t(p, t);
      CHECK(a.applicable == b.applicable);
      CHECK(a.edgeThreshold == b.edgeThreshold);
      CHECK(a.conclusion == b.conclusion);
      BoundResult c = alpha_bound_plus_t(p, t), d = alpha_bound_plus_t(p, t);
      CHECK(c.edgeThreshold == d.edgeThreshold);
    }
}

TEST_CASE("exhaustive soundness at small orders") {
  BoundCheckStats st;
  for (int p = 1; p <= 7; ++p)
    enumerate_graphs(p, nullptr, [&](const Graph& g) { check_graph_bounds(g, st); });
  CHECK(st.violations == 0);
  CHECK(st.applicablePairs > 1000);
  for (const auto& s : st.samples) MESSAGE(s);
}

TEST_CASE("half bound verified exhaustively on sparse order-7 graphs") {
  // order 7, at most 3 edges: alpha must be at least 4
  const int nbits = 21;
  for (uint64_t mask = 0; mask < (1ull << nbits); ++mask) {
    if (std::popcount(mask) > 3) continue;
    testutil::LGraph g = testutil::from_mask(7, mask);
    CHECK(testutil::alpha_scan(g) >= 4);
  }
}
