#include <doctest.h>

#include "rkh/checks.hpp"
#include "rkh/links.hpp"
#include "support.hpp"

using namespace rkh;
using namespace fixtures;

TEST_CASE("parse PD codes") {
  auto pd = parse_pd(kTrefoil);
  CHECK(pd.size() == 3);
  CHECK(pd.crossings[0] == std::array<int, 4>{1, 5, 2, 4});
  CHECK(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").crossings == pd.crossings);
  CHECK(parse_pd("# comment\nX[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n").crossings == pd.crossings);
  CHECK(parse_pd(to_string(pd)).crossings == pd.crossings);
  CHECK(parse_pd("").size() == 0);

  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), Error);
  CHECK_THROWS_AS(parse_pd("X[1,5,2,4] X[3,1,4,6]"), Error);
  CHECK_THROWS_AS(parse_pd("Y[1,1,2,2]"), Error);
}

TEST_CASE("crossing signs") {
  CHECK(sign_count(parse_pd(kTrefoil)).n_plus == 3);
  CHECK(sign_count(parse_pd(kTrefoil)).n_minus == 0);
  CHECK(sign_count(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")).n_minus == 3);
  CHECK(sign_count(parse_pd(kFigureEight)).writhe() == 0);
  const auto s = sign_count(parse_pd(kUnknot3));
  CHECK(s.n_plus + s.n_minus == 3);
  CHECK(s.writhe() == -1);
}

TEST_CASE("all-A graph of the three-crossing unknot") {
  const auto a = all_A_ribbon_graph(parse_pd(kUnknot3));
  CHECK(a.presentation.circles.size() == 2);
  CHECK(a.presentation.num_labels() == 3);
  CHECK(check_orientable(a.presentation));
  CHECK(isomorphic(to_ribbon_graph(a.presentation), graph(kTwoVertex)));
}

TEST_CASE("all-A graph of small diagrams") {
  const auto kink = all_A_ribbon_graph(parse_pd("X[1,1,2,2]"));
  const auto g = to_ribbon_graph(kink.presentation);
  CHECK(isomorphic(g, graph(kBridge)));
  CHECK(kink.signs.n_plus == 1);
  CHECK(kink.signs.n_minus == 0);

  const auto empty = all_A_ribbon_graph(parse_pd(""));
  CHECK(empty.presentation.circles.size() == 1);
  CHECK(empty.presentation.num_labels() == 0);
  CHECK(empty.signs.n_plus == 0);
  CHECK(empty.signs.n_minus == 0);

  // alternating diagrams give plane graphs
  for (const char* pd : {kTrefoil, kFigureEight}) CHECK(genus(all_A(pd)) == 0);
}

TEST_CASE("Kauffman states of the three-crossing unknot") {
  const auto pd = parse_pd(kUnknot3);
  // bit k is crossing k+1; crossing 3 is the loop of the all-A graph
  CHECK(kauffman_state(pd, 0b000).circle_count == 2);
  CHECK(kauffman_state(pd, 0b001).circle_count == 1);
  CHECK(kauffman_state(pd, 0b010).circle_count == 1);
  CHECK(kauffman_state(pd, 0b100).circle_count == 3);
  // |s_A| + |s_B| = c + 2 - 2 g_T with Turaev genus 1
  CHECK(kauffman_state(pd, 0b111).circle_count == 1);
}

TEST_CASE("state circles equal boundary components") {
  for (const char* name : {"unknot3.pd", "trefoil.pd", "trefoil_left.pd", "figure_eight.pd", "hopf.pd",
                           "knot_5_1.pd", "knot_5_2.pd", "knot_6_1.pd", "kink.pd"}) {
    const auto r = check_state_circles(parse_pd(read_file(data_path(name))));
    CHECK_MESSAGE(r.passed, name << ": " << r.detail);
  }
}

TEST_CASE("link homology after the grading shift") {
  // unknot diagrams all give V
  for (const char* pd : {kUnknot3, "X[1,1,2,2]", "X[2,1,1,2]"}) {
    const auto p = parse_pd(pd);
    const auto s = sign_count(p);
    const auto kh = shift(homology(build_complex(all_A(pd))), -s.n_minus, s.n_plus - 2 * s.n_minus);
    CHECK(kh == free_group({{0, -1, 1}, {0, 1, 1}}));
  }
  // right trefoil
  const auto kh = shift(homology(build_complex(all_A(kTrefoil))), 0, 3);
  BigradedGroup expected = free_group({{0, 1, 1}, {0, 3, 1}, {2, 5, 1}, {3, 9, 1}});
  expected.set({3, 7}, GroupEntry{0, {2}});
  CHECK(kh == expected);
}
