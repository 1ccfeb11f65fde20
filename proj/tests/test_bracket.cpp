#include "knotspan/bracket.hpp"

#include "fixtures.hpp"
#include "knotspan/harness.hpp"
#include "knotspan/states.hpp"

#include <doctest.h>

using namespace knotspan;

TEST_CASE("pinned bracket values") {
  CHECK(kauffman_bracket(fixtures::trefoil()) == fixtures::trefoil_bracket());
  CHECK(kauffman_bracket(fixtures::trefoil()).to_string() ==
        "A^7 - A^3 - A^-5");

  Laurent1 hopfB;
  hopfB.add_term(4, -1);
  hopfB.add_term(-4, -1);
  CHECK(kauffman_bracket(fixtures::hopf()) == hopfB);

  CHECK(kauffman_bracket(fixtures::curl()) == Laurent1::monomial(3, -1));

  // 0-crossing diagrams: <unknot> = 1, each extra circle multiplies by delta.
  CHECK(kauffman_bracket(parse_pd("u : O1")) == Laurent1(BigInt(1)));
  Laurent1 delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  CHECK(kauffman_bracket(parse_pd("uu : O2")) == delta);
}

TEST_CASE("pinned Jones values") {
  Laurent1 v;  // left trefoil in q = t^{1/4}
  v.add_term(-4, 1);
  v.add_term(-12, 1);
  v.add_term(-16, -1);
  CHECK(jones(fixtures::trefoil()).q == v);
  CHECK(span_jones(fixtures::trefoil()) == 3);
  // Unknot diagrams normalize to 1.
  CHECK(jones(parse_pd("u : O1")).q == Laurent1(BigInt(1)));
  CHECK(jones(fixtures::curl()).q == Laurent1(BigInt(1)));
}

TEST_CASE("mirror symmetry of the bracket") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    LinkDiagram d = random_diagram(seed, 2 + seed % 3, 3 + seed % 9);
    CHECK(kauffman_bracket(mirror(d)) == kauffman_bracket(d).mirrored());
    CHECK(jones(mirror(d)).q == jones(d).q.mirrored());
  }
}

TEST_CASE("degree bounds and mod-4 support") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    LinkDiagram d = random_diagram(seed, 2 + seed % 4, 3 + seed % 9);
    BracketReport r = bracket_report(d);
    REQUIRE(!r.bracket.is_zero());
    CHECK(r.bracket.maxdeg() <= r.M);
    CHECK(r.bracket.mindeg() >= r.m);
    CHECK(mod4_support_check(r.bracket));
    CHECK(r.aM == r.bracket.coeff(r.M));
    CHECK(r.am == r.bracket.coeff(r.m));
  }
}

TEST_CASE("Kauffman-Murasugi-Thistlethwaite span on generated diagrams") {
  // Reduced alternating: span <D> = 4c.
  for (int n : {3, 4, 5, 6, 7, 9}) {
    std::vector<int> w(n, 1);
    LinkDiagram d = braid_closure(w, 2);
    CHECK(bracket_report(d).spanBracket == 4 * n);
  }
  for (auto t : {std::vector<int>{2, 3, 3}, {3, 3, 3}, {2, 3, 5}}) {
    LinkDiagram d = pretzel_diagram(t);
    CHECK(bracket_report(d).spanBracket == 4 * d.crossing_count());
  }
  // Connected reduced non-alternating: span <D> <= 4(c-1).
  for (auto t : {std::vector<int>{3, -2, 3}, {-2, 3, 7}, {2, 2, -2, -2},
                 {3, 3, -3, -2}}) {
    LinkDiagram d = pretzel_diagram(t);
    REQUIRE(is_reduced(d));
    REQUIRE(!is_alternating_diagram(d));
    CHECK(bracket_report(d).spanBracket <= 4 * (d.crossing_count() - 1));
  }
}

TEST_CASE("crossing limit guard") {
  std::vector<int> w(25, 1);
  LinkDiagram big = braid_closure(w, 2);
  CHECK(big.crossing_count() > kBracketCrossingLimit);
  CHECK_THROWS(kauffman_bracket(big));
}
