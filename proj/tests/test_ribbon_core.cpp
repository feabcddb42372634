#include <doctest.h>

#include "rkh/arrow.hpp"
#include "rkh/ribbon_graph.hpp"
#include "support.hpp"

using namespace rkh;
using namespace fixtures;

TEST_CASE("parse arrow presentations") {
  auto ap = parse_arrow_presentation(kThreeLoops);
  CHECK(ap.circles.size() == 1);
  CHECK(ap.circles[0].size() == 6);
  CHECK(ap.num_labels() == 3);

  ap = parse_arrow_presentation("circle:");
  CHECK(ap.circles.size() == 1);
  CHECK(ap.num_labels() == 0);

  ap = parse_arrow_presentation("circle: 1+ 3+ 2- 3- ; circle: 1- 2+");
  CHECK(ap.circles.size() == 2);
  CHECK(ap.num_labels() == 3);

  ap = parse_arrow_presentation("# comment\ncircle: 10+ 30+\ncircle: 30+ 10+\n");
  CHECK(ap.sorted_labels() == std::vector<int>{1, 2});
  CHECK(ap.circles[0][0].label == 1);
  CHECK(ap.circles[0][1].label == 2);
}

TEST_CASE("malformed presentations are rejected") {
  CHECK_THROWS_AS(parse_arrow_presentation("circle: 1+ 2+ 1+"), Error);
  CHECK_THROWS_AS(parse_arrow_presentation("circle: 1+ 1+ 1+"), Error);
  CHECK_THROWS_AS(parse_arrow_presentation("circle: 1x 1+"), Error);
  CHECK_THROWS_AS(parse_arrow_presentation("1+ 1+"), Error);
}

TEST_CASE("orientability") {
  CHECK(check_orientable(parse_arrow_presentation(kThreeLoops)));
  CHECK(check_orientable(parse_arrow_presentation("circle:")));
  CHECK_FALSE(check_orientable(parse_arrow_presentation("circle: 1+ 1-")));
  CHECK_THROWS_AS(to_ribbon_graph(parse_arrow_presentation("circle: 1+ 1-")), Error);
  // label 3 twice on one circle in opposite directions
  CHECK_FALSE(check_orientable(parse_arrow_presentation("circle: 1+ 3+ 2- 3- ; circle: 1- 2+")));
  // flipping a whole circle keeps it orientable
  CHECK(check_orientable(parse_arrow_presentation("circle: 1+ 3+ 2+ 3+ ; circle: 1- 2-")));
}

TEST_CASE("to_ribbon_graph") {
  auto g = graph(kThreeLoops);
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 3);
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(g, e) == EdgeKind::NonseparatingLoop);

  g = graph(kTwoVertex);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 3);
  CHECK(g.is_loop(g.edge_with_label(3)));
  CHECK_FALSE(g.is_loop(g.edge_with_label(1)));
  // a flipped second circle gives the same graph
  CHECK(isomorphic(g, graph("circle: 1+ 3+ 2+ 3+ ; circle: 2- 1-")));
}

TEST_CASE("emit round trip") {
  for (const auto& g : test_graphs(15)) {
    const auto text = emit_arrow_presentation(from_ribbon_graph(g));
    CHECK(isomorphic(graph(text), g));
  }
}

TEST_CASE("boundary components") {
  const auto tl = graph(kThreeLoops);
  CHECK(boundary_count(tl, 0) == 1);
  CHECK(boundary_count(tl, tl.all_edges()) == 2);

  const auto tv = graph(kTwoVertex);
  CHECK(boundary_count(tv, 0) == 2);
  CHECK(boundary_count(tv, EdgeSet{1} << tv.edge_with_label(1)) == 1);

  // isolated vertex contributes one walk
  const auto iso = graph("circle: ; circle: 1+ 1+");
  CHECK(boundary_count(iso, iso.all_edges()) == 3);
}

TEST_CASE("walk tracing agrees with the permutation count") {
  for (const auto& g : test_graphs(20, 7)) {
    for (EdgeSet h = 0; h <= g.all_edges(); ++h) {
      const auto sub = spanning_subgraph(g, h);
      const int f = boundary_count(g, h);
      REQUIRE(f == face_count_by_permutation(sub));
      // Euler relation gives a nonnegative integer genus
      const int twice = 2 * component_count(g, h) - g.num_vertices() + popcount(h) - f;
      CHECK(twice >= 0);
      CHECK(twice % 2 == 0);
      CHECK(genus(g, h) == twice / 2);
    }
  }
}

TEST_CASE("deleting an edge outside H leaves H's boundary alone") {
  std::mt19937_64 rng(3);
  for (const auto& g : test_graphs(10)) {
    if (g.num_edges() == 0) continue;
    const int e = static_cast<int>(rng() % g.num_edges());
    const auto d = delete_edge(g, e);
    for (EdgeSet h = 0; h <= g.all_edges(); ++h) {
      if ((h >> e) & 1) continue;
      // drop bit e to index edges of the smaller graph
      const EdgeSet low = h & ((EdgeSet{1} << e) - 1);
      const EdgeSet high = (h >> (e + 1)) << e;
      CHECK(boundary_count(g, h) == boundary_count(d, low | high));
    }
  }
}

TEST_CASE("genus") {
  CHECK(genus(graph("circle:")) == 0);
  CHECK(genus(graph(kThreeLoops)) == 1);
  CHECK(genus(graph(kTwoVertex)) == 1);
  CHECK(genus(graph(kTheta)) == 0);
  CHECK(genus(graph("circle: 1+ 2+ 3+ ; circle: 1+ 2+ 3+")) == 1);
}

TEST_CASE("dual") {
  const auto loop = graph(kLoop);
  const auto bridge = graph(kBridge);
  CHECK(isomorphic(dual(loop), bridge));
  CHECK(isomorphic(dual(bridge), loop));

  const auto dtl = dual(graph(kThreeLoops));
  CHECK(dtl.num_vertices() == 2);
  CHECK(dtl.num_edges() == 3);
  CHECK(dtl.labels() == graph(kThreeLoops).labels());

  for (const auto& g : test_graphs(20)) {
    const auto d = dual(g);
    CHECK(d.num_vertices() == face_count_by_permutation(g));
    CHECK(face_count_by_permutation(d) == g.num_vertices());
    CHECK(d.num_edges() == g.num_edges());
    CHECK(genus(d) == genus(g));
    CHECK(isomorphic(dual(d), g));
  }
}

TEST_CASE("dual basepoint sits on the same corner") {
  for (const auto& g : test_graphs(10)) {
    const auto d = dual(g);
    for (int v = 0; v < g.num_vertices(); ++v)
      for (int gap = 0; gap < std::max(1, g.degree(v)); ++gap) {
        const Basepoint bp{v, gap};
        const Basepoint db = dual_basepoint(g, bp);
        if (g.num_edges() == 0) {
          CHECK(db.vertex == 0);
          continue;
        }
        CHECK(basepoint_corner(d, db) == partner(basepoint_corner(g, bp)));
      }
  }
}

TEST_CASE("delete_edge") {
  const auto tl = graph(kThreeLoops);
  const auto d = delete_edge(tl, tl.edge_with_label(3));
  CHECK(d.num_vertices() == 1);
  CHECK(d.num_edges() == 2);
  CHECK(isomorphic(d, graph("circle: 1+ 2+ 1+ 2+")));

  const auto b = delete_edge(graph(kBridge), 0);
  CHECK(b.num_vertices() == 2);
  CHECK(b.num_edges() == 0);
  CHECK(component_count(b) == 2);

  const auto tv = graph(kTwoVertex);
  const auto f = delete_edge(tv, tv.edge_with_label(1));
  CHECK(f.num_vertices() == 2);
  CHECK(f.labels() == std::vector<int>{2, 3});
  CHECK_FALSE(f.is_loop(f.edge_with_label(2)));
  CHECK(f.is_loop(f.edge_with_label(3)));

  CHECK_THROWS_AS(delete_edge(tv, 3), Error);
}

TEST_CASE("contract_edge") {
  // loop 6 with half-edges of 1,2,3 on one side and 4,5 on the other
  const auto g = graph("circle: 6+ 1+ 2+ 3+ 6+ 4+ 5+ ; circle: 1+ ; circle: 2+ ; circle: 3+ ; circle: 4+ ; circle: 5+");
  const auto c = contract_edge(g, g.edge_with_label(6));
  CHECK(c.num_vertices() == 7);
  CHECK(labels_at(c, 0) == std::set<int>{1, 2, 3});
  CHECK(labels_at(c, 6) == std::set<int>{4, 5});

  const auto b = contract_edge(graph(kBridge), 0);
  CHECK(b.num_vertices() == 1);
  CHECK(b.num_edges() == 0);

  const auto tl = graph(kThreeLoops);
  const auto s = contract_edge(tl, tl.edge_with_label(1));
  CHECK(s.num_vertices() == 2);
  CHECK(s.num_edges() == 2);
  for (int e = 0; e < 2; ++e) CHECK_FALSE(s.is_loop(e));

  CHECK_THROWS_AS(contract_edge(tl, -1), Error);
}

TEST_CASE("classify_edge") {
  CHECK(classify_edge(graph(kBridge), 0) == EdgeKind::Bridge);
  CHECK(classify_edge(graph(kLoop), 0) == EdgeKind::SeparatingLoop);
  const auto tl = graph(kThreeLoops);
  CHECK(classify_edge(tl, tl.edge_with_label(1)) == EdgeKind::NonseparatingLoop);
  const auto th = graph(kTheta);
  CHECK(classify_edge(th, 0) == EdgeKind::Ordinary);
  CHECK_THROWS_AS(classify_edge(th, 5), Error);
}

TEST_CASE("adequacy") {
  CHECK_FALSE(is_adequate(graph(kThreeLoops)));
  CHECK_FALSE(is_adequate(graph(kBridge)));
  CHECK_FALSE(is_adequate(graph(kTwoVertex)));
  CHECK(is_adequate(graph(kTheta)));
  CHECK(is_adequate(graph("circle:")));
}

TEST_CASE("isomorphism ignores relabeling and rotation start") {
  CHECK(isomorphic(graph("circle: 1+ 2+ 3+ ; circle: 3+ 2+ 1+"), graph("circle: 3+ 1+ 2+ ; circle: 1+ 3+ 2+")));
  CHECK_FALSE(isomorphic(graph("circle: 1+ 2+ 1+ 2+"), graph("circle: 1+ 1+ 2+ 2+")));
  CHECK_FALSE(isomorphic(graph("circle: 1+ 2+ 3+ ; circle: 3+ 2+ 1+"), graph("circle: 1+ 2+ 3+ ; circle: 1+ 2+ 3+")));
}
