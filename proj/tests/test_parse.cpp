#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmod/parse.hpp"
#include "support.hpp"

using namespace dmod;
using testsupport::mm;
using testsupport::Rng;

namespace {

// Asserts the reported source location along with the type.
template <typename Fn>
void check_parse_error(Fn&& fn, int line, int col) {
  try {
    fn();
    FAIL_CHECK("expected a parse error at line ", line, ", column ", col);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.col() == col);
  }
}

}  // namespace

TEST_CASE("the worked presentations parse to the expected elements") {
  const ModulePresentation p =
      parse_presentation("weyl n=2 m=2\nrel: x1^2 d1^3 e1 + d1^5 e1\nrel: x2^2 e1 - x1 e2\n");
  CHECK(p.n == 2);
  CHECK(p.m == 2);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] ==
        ModuleElement(2, 2,
                      {{mm({2, 0}, {3, 0}, 1), QQ(1)}, {mm({0, 0}, {5, 0}, 1), QQ(1)}}));
  CHECK(p.relations[1] ==
        ModuleElement(2, 2,
                      {{mm({0, 2}, {0, 0}, 1), QQ(1)}, {mm({1, 0}, {0, 0}, 2), QQ(-1)}}));
}

TEST_CASE("factors multiply in the ring, left to right") {
  // d1 x1 = x1 d1 + 1, so the term expands to two monomials.
  const ModuleElement f = testsupport::rel(1, 1, "d1 x1 e1");
  CHECK(f == ModuleElement(1, 1, {{mm({1}, {1}, 1), QQ(1)}, {mm({0}, {0}, 1), QQ(1)}}));

  CHECK(testsupport::rel(1, 1, "d1^2 x1 e1") ==
        ModuleElement(1, 1, {{mm({1}, {2}, 1), QQ(1)}, {mm({0}, {1}, 1), QQ(2)}}));
}

TEST_CASE("coefficients, signs and exponents") {
  CHECK(testsupport::rel(1, 2, "2/3 x1 d1^2 e2") ==
        ModuleElement(1, 2, {{mm({1}, {2}, 2), make_rational(ZZ(2), ZZ(3))}}));
  CHECK(testsupport::rel(1, 1, "-x1 e1") ==
        ModuleElement(1, 1, {{mm({1}, {0}, 1), QQ(-1)}}));
  CHECK(testsupport::rel(1, 1, "- 5 e1") ==
        ModuleElement(1, 1, {{mm({0}, {0}, 1), QQ(-5)}}));
  CHECK(testsupport::rel(1, 1, "e1 + e1") ==
        ModuleElement(1, 1, {{mm({0}, {0}, 1), QQ(2)}}));
  CHECK(testsupport::rel(1, 1, "3 e1 - 2 e1") ==
        ModuleElement(1, 1, {{mm({0}, {0}, 1), QQ(1)}}));
  CHECK(testsupport::rel(1, 1, "+ x1 e1") ==
        ModuleElement(1, 1, {{mm({1}, {0}, 1), QQ(1)}}));
}

TEST_CASE("the unicode derivation symbol is an alias") {
  CHECK(testsupport::rel(1, 1, "\xe2\x88\x82" "1^5 e1") ==
        testsupport::rel(1, 1, "d1^5 e1"));
}

TEST_CASE("header variations") {
  const ModulePresentation p = parse_presentation("\n\n  weyl  n = 2   m = 3\n");
  CHECK(p.n == 2);
  CHECK(p.m == 3);
  CHECK(p.relations.empty());
}

TEST_CASE("error positions") {
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: y1 e1\n"); }, 2, 6);
  check_parse_error([] { parse_presentation("weyl n=1 m=2\nrel: x1 e3\n"); }, 2, 10);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: x2 e1\n"); }, 2, 7);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: 1/0 e1\n"); }, 2, 8);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: e1 - e1\n"); }, 2, 1);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel:\n"); }, 2, 5);
  check_parse_error([] { parse_presentation("foo\n"); }, 1, 1);
  check_parse_error([] { parse_presentation("weyl n=0 m=1\n"); }, 1, 8);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: x1^2000000 e1\n"); }, 2, 9);
  check_parse_error([] { parse_presentation("weyl n=1 m=1\nrel: x1 e1 junk\n"); }, 2, 12);

  // The formatted message carries the location.
  try {
    parse_presentation("weyl n=1 m=1\nrel: y1 e1\n");
    FAIL_CHECK("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "line 2, column 6: expected factor or generator");
  }
}

TEST_CASE("printing is canonical and round-trips") {
  const std::string text =
      "weyl n=2 m=2\nrel: x1^2 d1^3 e1 + d1^5 e1\nrel: x2^2 e1 - x1 e2\n";
  CHECK(print_presentation(parse_presentation(text)) == text);

  const std::string n3 = "weyl n=3 m=1\nrel: x2 e1 + e1\nrel: x1 e1\nrel: d3 e1 - e1\n";
  CHECK(print_presentation(parse_presentation(n3)) == n3);

  // Unsorted input is printed in canonical descending term order.
  CHECK(print_presentation(parse_presentation("weyl n=1 m=1\nrel: e1 + x1^2 e1\n")) ==
        "weyl n=1 m=1\nrel: x1^2 e1 + e1\n");
}

TEST_CASE("random elements survive a print/parse cycle") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 3);
    ModulePresentation p;
    p.n = n;
    p.m = m;
    const int rels = rng.uniform(1, 3);
    for (int i = 0; i < rels; ++i) p.relations.push_back(rng.module_element(n, m, 4, 3));
    const ModulePresentation q = parse_presentation(print_presentation(p));
    CHECK(q.n == p.n);
    CHECK(q.m == p.m);
    REQUIRE(q.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      CHECK(q.relations[i] == p.relations[i]);
  }
}

TEST_CASE("point set parsing") {
  CHECK(parse_point_set("(2,0);(0,3)", 2) == PointSet(2, {{2, 0}, {0, 3}}));
  CHECK(parse_point_set("", 2) == PointSet(2));
  CHECK(parse_point_set("  ( 1 , 2 ) ; ", 2) == PointSet(2, {{1, 2}}));
  CHECK(parse_point_set("(1,0);\n(0,1)", 2) == PointSet(2, {{1, 0}, {0, 1}}));
  CHECK(parse_point_set("(4)", 1) == PointSet(1, {{4}}));

  CHECK_THROWS_AS(parse_point_set("(1)", 2), ParseError);
  CHECK_THROWS_AS(parse_point_set("(1,2)(3,4)", 2), ParseError);
  CHECK_THROWS_AS(parse_point_set("1,2", 2), ParseError);
  CHECK_THROWS_AS(parse_point_set("(-1,0)", 2), ParseError);
  CHECK_THROWS_AS(parse_point_set("(1,2,3)", 2), ParseError);
  CHECK_THROWS_AS(parse_point_set("", 0), std::invalid_argument);
}
