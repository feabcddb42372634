#include <doctest.h>

#include "rkh/moves.hpp"
#include "support.hpp"

using namespace rkh;
using namespace fixtures;

namespace {

ArrowPresentation ap(const char* text) { return parse_arrow_presentation(text); }

int max_label(const ArrowPresentation& p) {
  const auto l = p.sorted_labels();
  return l.empty() ? 0 : l.back();
}

// the inverse of a forward move, naming the labels it introduced
MoveSite inverse_of(const MoveSite& s, int fresh) {
  MoveSite inv;
  inv.kind = s.kind;
  inv.inverse = !s.inverse;
  inv.labels = s.kind == MoveKind::R3 ? s.labels : std::array<int, 3>{fresh, fresh + 1, 0};
  return inv;
}

}  // namespace

TEST_CASE("parse and print moves") {
  for (const char* line : {"R1a c0 p3", "R1b c1 p0", "R2 c0 p1 c1 p4", "R3 1 2 3", "R1a- 4", "R1b- 4", "R2- 4 5",
                           "R3- 1 2 3"}) {
    const auto s = parse_move(line);
    CHECK(to_string(s) == line);
    CHECK(parse_move(to_string(s)) == s);
  }
  const auto s = parse_move("R2 c0 p1 c1 p4");
  CHECK(s.kind == MoveKind::R2);
  CHECK(s.circle2 == 1);
  CHECK(s.gap2 == 4);

  const auto script = parse_move_script("# moves\nR1a c0 p0\n\nR1b- 2\n");
  REQUIRE(script.size() == 2);
  CHECK(script[1].inverse);

  CHECK_THROWS_AS(parse_move(""), Error);
  CHECK_THROWS_AS(parse_move("R4 1 2 3"), Error);
  CHECK_THROWS_AS(parse_move("R1a 0 3"), Error);
  CHECK_THROWS_AS(parse_move("R2 c0 p1"), Error);
  CHECK_THROWS_AS(parse_move("R3 1 2"), Error);
}

TEST_CASE("shifts") {
  CHECK(move_shift(parse_move("R1a c0 p0")) == std::pair(0, -1));
  CHECK(move_shift(parse_move("R1b c0 p0")) == std::pair(1, 2));
  CHECK(move_shift(parse_move("R2 c0 p0 c0 p0")) == std::pair(1, 1));
  CHECK(move_shift(parse_move("R3 1 2 3")) == std::pair(0, 0));
  CHECK(move_shift(parse_move("R1b- 1")) == std::pair(-1, -2));
  CHECK(move_shift(parse_move("R2- 1 2")) == std::pair(-1, -1));
}

TEST_CASE("forward moves on small presentations") {
  // vertex-edge on the empty circle gives the bridge
  const auto b = apply_move(ap("circle:"), parse_move("R1a c0 p0"));
  CHECK(isomorphic(to_ribbon_graph(b), graph(kBridge)));

  const auto d = apply_move(ap("circle: 1+ 1+"), parse_move("R1b c0 p1"));
  CHECK(emit_arrow_presentation(d) == emit_arrow_presentation(ap("circle: 1+ 2+ 2+ 1+")));

  // two circles joined by an R2 merge
  const auto m = apply_move(ap("circle: ; circle:"), parse_move("R2 c0 p0 c1 p0"));
  CHECK(m.circles.size() == 1);
  CHECK(m.num_labels() == 2);
}

TEST_CASE("Reidemeister III rewrites the three-arrow pattern") {
  const auto before = ap("circle: 1+ 2+ 3+ ; circle: 3+ 1+ ; circle: 2+");
  const auto after = apply_move(before, parse_move("R3 1 2 3"));
  CHECK(isomorphic(to_ribbon_graph(after), graph("circle: 3+ 2+ 1+ ; circle: 2+ ; circle: 1+ 3+")));
  CHECK(isomorphic(to_ribbon_graph(apply_move(after, parse_move("R3- 1 2 3"))), to_ribbon_graph(before)));
  const auto r = check_invariance(before, parse_move("R3 1 2 3"));
  CHECK(r.ok());
  CHECK(r.shift == std::pair(0, 0));
}

TEST_CASE("inapplicable sites are errors") {
  const auto p = ap(kThreeLoops);
  CHECK_THROWS_AS(apply_move(p, parse_move("R1a c1 p0")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R1a c0 p6")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R1a- 1")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R1b- 1")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R2- 1 2")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R3 1 2 3")), Error);
  CHECK_THROWS_AS(apply_move(p, parse_move("R3 1 1 2")), Error);
}

TEST_CASE("invariance examples") {
  auto r = check_invariance(ap(kThreeLoops), parse_move("R1b c0 p0"));
  CHECK(r.shift == std::pair(1, 2));
  CHECK(r.unreduced_ok);
  CHECK(r.reduced_checked);
  CHECK(r.ok());

  r = check_invariance(ap(kTwoVertex), parse_move("R1a c0 p0"));
  CHECK(r.shift == std::pair(0, -1));
  CHECK(r.ok());
  CHECK(r.after == shift(r.before, 0, -1));
}

TEST_CASE("basepoints follow the move") {
  const auto res = apply_move(ap(kThreeLoops), parse_move("R1b c0 p3"), Basepoint{0, 0});
  REQUIRE(res.basepoint);
  CHECK(res.basepoint->vertex == 0);
  // the first one-arrow circle is the one removed
  const auto gone = apply_move(ap("circle: 1+ ; circle: 1+"), parse_move("R1a- 1"), Basepoint{0, 0});
  CHECK_FALSE(gone.basepoint);
  const auto kept = apply_move(ap("circle: 1+ ; circle: 1+"), parse_move("R1a- 1"), Basepoint{1, 0});
  REQUIRE(kept.basepoint);
  CHECK(kept.basepoint->vertex == 0);
}

TEST_CASE("forward then inverse restores the graph") {
  for (const auto& g : test_graphs(8, 4)) {
    const auto p = from_ribbon_graph(g);
    const int fresh = max_label(p) + 1;
    for (const auto& s : enumerate_sites(p)) {
      if (s.inverse) continue;
      const auto after = apply_move(p, s);
      const auto back = apply_move(after, inverse_of(s, fresh));
      CHECK_MESSAGE(isomorphic(to_ribbon_graph(back), g), describe(g) << " " << to_string(s));
    }
  }
}

TEST_CASE("every site of small graphs preserves homology up to its shift") {
  std::mt19937_64 rng(53);
  std::vector<RibbonGraph> graphs{graph("circle:"), graph(kLoop), graph(kBridge), graph(kTwoVertex)};
  for (int t = 0; t < 4; ++t) graphs.push_back(random_connected(rng, 3, 3));
  for (const auto& g : graphs) {
    const auto p = from_ribbon_graph(g);
    for (const auto& s : enumerate_sites(p)) {
      const auto r = check_invariance(p, s, 10);
      CHECK_MESSAGE(r.ok(), describe(g) << " " << to_string(s));
    }
  }
}
