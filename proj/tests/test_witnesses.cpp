#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/closed_forms.hpp"
#include "ramsey/witnesses.hpp"

using namespace ramsey;

TEST_CASE("matching witnesses") {
  Witness w = witness_matching(6, 2, 6);
  CHECK(component_string(w) == "2K2 + 3K1");
  CHECK(w.order() == 7);
  CHECK(w.alpha() == 5);

  w = witness_matching(4, 1, 5);
  CHECK(component_string(w) == "K2 + 3K1");
  CHECK(w.order() == 5);
  CHECK(w.alpha() == 4);

  w = witness_matching(8, 3, 7);
  CHECK(component_string(w) == "3K2 + 3K1");
  CHECK(w.order() == 9);
  CHECK(w.alpha() == 6);

  CHECK_THROWS_AS(witness_matching(6, 3, 6), std::invalid_argument);  // 2r > n-2
  CHECK_THROWS_AS(witness_matching(6, 2, 4), std::invalid_argument);  // k+r <= n
}

TEST_CASE("triangle witnesses") {
  Witness w = witness_triangles(5, 2, 4);
  CHECK(component_string(w) == "3K2");
  CHECK(w.order() == 6);
  CHECK(w.alpha() == 3);

  w = witness_triangles(6, 4, 4);
  CHECK(component_string(w) == "K3 + 2K2");
  CHECK(w.order() == 7);
  CHECK(w.alpha() == 3);

  w = witness_triangles(4, 2, 5);
  CHECK(component_string(w) == "4K2");
  CHECK(w.order() == 8);
  CHECK(w.alpha() == 4);

  CHECK_THROWS_AS(witness_triangles(6, 2, 4), std::invalid_argument);  // 2r < n-1
  CHECK_THROWS_AS(witness_triangles(8, 4, 2), std::invalid_argument);  // r <= 2n-3k+2
}

TEST_CASE("trivial-order witnesses") {
  CHECK(component_string(witness_trivial_order(4, 2)) == "K3");
  CHECK(component_string(witness_trivial_order(6, 3)) == "K5");
  CHECK(component_string(witness_trivial_order(5, 9)) == "K4");
  Witness w = witness_trivial_order(6, 3);
  CHECK(w.order() == 5);
  CHECK(w.alpha() == 1);
}

TEST_CASE("dispatch") {
  CHECK(witness_case(5, 1, 3) == WitnessCase::trivialOrder);
  CHECK(component_string(best_witness(5, 1, 3)) == "K4");
  CHECK(witness_case(5, 2, 4) == WitnessCase::triangles);
  CHECK(component_string(best_witness(5, 2, 4)) == "3K2");
  CHECK(witness_case(6, 2, 7) == WitnessCase::matching);
  Witness w = best_witness(6, 2, 7);
  CHECK(component_string(w) == "2K2 + 4K1");
  CHECK(w.order() == 8);
  CHECK(generalized_ramsey_closed(6, 2, 7) == 9);
  // odd-n boundary r = (n-1)/2 goes to the triangle case
  CHECK(witness_case(5, 2, 5) == WitnessCase::triangles);
}

TEST_CASE("turan graphs") {
  Graph g = turan_graph(5, 2);
  CHECK(g.edge_count() == 6);
  CHECK(independence_number(g) == 3);  // K_{3,2}
  g = turan_graph(6, 3);
  CHECK(g.edge_count() == 12);  // K_{2,2,2}
  CHECK(independence_number(g) == 2);
  CHECK(turan_graph(4, 4) == Graph::complete(4));
  CHECK_THROWS_AS(turan_graph(4, 0), std::invalid_argument);
}

TEST_CASE("verification over the full grid") {
  for (int n = 4; n <= 10; ++n) {
    for (int r = 1; r <= n - 2; ++r) {
      for (int k = 2; k <= 10; ++k) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(k);
        Witness w = best_witness(n, r, k);
        WitnessReport rep = verify_witness(w);
        CHECK(rep.pass());
        CHECK(rep.order == generalized_ramsey_closed(n, r, k) - 1);
      }
    }
  }
}

TEST_CASE("witness subgraphs decompose within the edge budget") {
  for (int n = 4; n <= 9; ++n) {
    for (int r = 1; r <= n - 2; ++r) {
      for (int k = 2; k <= 7; ++k) {
        Witness w = best_witness(n, r, k);
        Graph g = realize(w);
        if (g.order() < n) continue;
        // every n-subset is xK1 u yK2 u zK3 with y + 3z <= r
        CHECK(induced_edge_extrema(g, n).max <= r);
      }
    }
  }
}

TEST_CASE("standalone trivial witness verifies against the unconditional bound") {
  Witness w = witness_trivial_order(6, 3);  // r = 0: claims only R > n-1
  WitnessReport rep = verify_witness(w);
  CHECK(rep.pass());
  CHECK(rep.expectedOrder == 5);
  CHECK(rep.nrVacuous);
  CHECK(rep.alpha == 1);
  CHECK(witness_verification_feasible(w));
  Witness big = best_witness(40, 20, 30);
  CHECK_FALSE(witness_verification_feasible(big));
}

TEST_CASE("tampered witnesses fail verification") {
  Witness bogus{{2, 2, 2, 2}, 5, 2, 4};  // 4K2 claimed for (n=5, r=2, k=4)
  WitnessReport rep = verify_witness(bogus);
  CHECK_FALSE(rep.orderOk);  // order 8 != 6
  CHECK_FALSE(rep.pass());

  Witness wrongAlpha{{3, 3}, 6, 4, 4};  // alpha 2, needs k-1 = 3
  rep = verify_witness(wrongAlpha);
  CHECK_FALSE(rep.pass());
}
