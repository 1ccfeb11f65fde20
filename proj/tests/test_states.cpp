#include "knotspan/states.hpp"

#include "fixtures.hpp"
#include "knotspan/harness.hpp"

#include <doctest.h>

using namespace knotspan;

TEST_CASE("state circle counts on pinned examples") {
  LinkDiagram tref = fixtures::trefoil();
  CHECK(resolve_all(tref, Side::A).circleCount == 3);
  CHECK(resolve_all(tref, Side::B).circleCount == 2);

  LinkDiagram hopf = fixtures::hopf();
  CHECK(resolve_all(hopf, Side::A).circleCount == 2);
  CHECK(resolve_all(hopf, Side::B).circleCount == 2);

  LinkDiagram curl = fixtures::curl();
  CHECK(resolve_all(curl, Side::A).circleCount == 2);
  CHECK(resolve_all(curl, Side::B).circleCount == 1);
}

TEST_CASE("free loops count as circles in both states") {
  LinkDiagram d = parse_pd("x : X[1,1,2,2] O3");
  CHECK(resolve_all(d, Side::A).circleCount == 5);
  CHECK(resolve_all(d, Side::B).circleCount == 4);
}

TEST_CASE("mirroring swaps the all-A and all-B states") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    LinkDiagram d = random_diagram(seed, 2 + seed % 3, 3 + seed % 8);
    LinkDiagram m = mirror(d);
    CHECK(resolve_all(m, Side::A).circleCount ==
          resolve_all(d, Side::B).circleCount);
    CHECK(resolve_all(m, Side::B).circleCount ==
          resolve_all(d, Side::A).circleCount);
  }
}

TEST_CASE("every trace has two endpoints; chords lie on one circle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LinkDiagram d = random_diagram(seed, 3, 7);
    for (Side side : {Side::A, Side::B}) {
      StateGeometry g = resolve_all(d, side);
      int endpoints = 0;
      for (const auto& circ : g.circleOrders) endpoints += static_cast<int>(circ.size());
      CHECK(endpoints == 2 * d.crossing_count());
      for (const Chord& ch : decorated_state(g)) {
        CHECK(g.arcCircle[ch.crossing][0] == ch.circle);
        CHECK(g.arcCircle[ch.crossing][1] == ch.circle);
        CHECK(ch.pos1 != ch.pos2);
      }
    }
  }
}

TEST_CASE("Turaev genus of a diagram") {
  CHECK(turaev_genus_diagram(fixtures::trefoil()) == 0);
  CHECK(turaev_genus_diagram(pretzel_diagram({3, -2, 3})) == 1);
  CHECK(turaev_genus_diagram(pretzel_diagram({-2, 3, 7})) == 1);
  CHECK(turaev_genus_diagram(pretzel_diagram({2, 3, 5})) == 0);
  // Alternating connected diagrams have genus zero. (The converse fails for
  // connected sums of alternating pieces, which random closures do produce.)
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    LinkDiagram d = random_diagram(seed, 2 + seed % 3, 4 + seed % 6);
    if (!is_connected(d)) continue;
    if (is_alternating_diagram(d)) CHECK(turaev_genus_diagram(d) == 0);
  }
  LinkDiagram split = parse_pd("split : X[1,1,2,2] O1");
  CHECK_THROWS_AS(turaev_genus_diagram(split), std::invalid_argument);
}

TEST_CASE("adequacy on pinned examples") {
  CHECK(is_adequate_diagram(fixtures::trefoil()));
  CHECK(is_adequate_diagram(fixtures::hopf()));
  CHECK(is_A_adequate(fixtures::curl()));
  CHECK(!is_B_adequate(fixtures::curl()));
  CHECK(!is_adequate_diagram(pretzel_diagram({3, -2, 3})));
  CHECK(is_adequate_diagram(pretzel_diagram({2, 2, -2, -2})));
  // Reduced alternating diagrams are adequate.
  for (int n : {3, 4, 5, 6, 7}) {
    std::vector<int> w(n, 1);
    CHECK(is_adequate_diagram(braid_closure(w, 2)));
  }
}
