#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmod/oracle.hpp"
#include "support.hpp"

using namespace dmod;
using testsupport::Rng;

TEST_CASE("standard monomial counts against hand enumeration") {
  // Basis {x1^2 e1} over one variable: monomials x^a d^b e1 with a <= 1.
  const Basis g = {testsupport::rel(1, 1, "x1^2 e1")};
  // Degree <= 3: b arbitrary with a + b <= 3 and a <= 1 -> 4 + 3 = 7.
  CHECK(count_standard_monomials(g, 1, 1, 3) == 7);
  CHECK(count_standard_monomials(g, 1, 1, 0) == 1);

  // Empty basis: all C(r+2n, 2n) monomials per generator survive.
  CHECK(count_standard_monomials({}, 1, 1, 3) == 10);
  CHECK(count_standard_monomials({}, 2, 2, 2) == 2 * 15);

  // A generator equal to a basis leading monomial kills everything.
  const Basis unit = {ModuleElement::generator(1, 1, 1)};
  for (int r = 0; r <= 4; ++r) CHECK(count_standard_monomials(unit, 1, 1, r) == 0);

  CHECK_THROWS_AS(count_standard_monomials(g, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("rank route equals counting route on the worked bases") {
  const Basis g1 = buchberger(testsupport::single_relation_n1().relations);
  for (int r = 0; r <= 7; ++r)
    CHECK(rank_dimension(g1, 1, 1, r) == count_standard_monomials(g1, 1, 1, r));

  const Basis g2 = buchberger(testsupport::pair_n2().relations);
  for (int r = 0; r <= 6; ++r)
    CHECK(rank_dimension(g2, 2, 2, r) == count_standard_monomials(g2, 2, 2, r));

  const Basis g3 = buchberger(testsupport::const_coeff_n3().relations);
  for (int r = 0; r <= 4; ++r)
    CHECK(rank_dimension(g3, 3, 1, r) == count_standard_monomials(g3, 3, 1, r));
}

TEST_CASE("rank route sees relations that are not leading monomials") {
  // Against the non-basis set {x1 e1 + e1} alone, reduction rewrites x1 e1
  // to -e1, so the surviving monomials are spanned by powers of d1 alone.
  const Basis g = {testsupport::rel(1, 1, "x1 e1 + e1")};
  for (int r = 0; r <= 5; ++r) CHECK(rank_dimension(g, 1, 1, r) == r + 1);
}

TEST_CASE("enumerated dimensions match the counting polynomial rows") {
  const DimensionTable t = verify_presentation(testsupport::pair_n2(), 12);
  REQUIRE(t.rows.size() == 13);
  const std::vector<long long> dims = {2,   10,  29,  65,   125,  216, 344,
                                       515, 735, 1010, 1346, 1749, 2225};
  for (int r = 0; r <= 12; ++r) {
    CHECK(t.rows[r].r == r);
    CHECK(t.rows[r].dim == dims[r]);
  }
  CHECK(t.first_agreement_r == 3);
  CHECK(t.rows[10].chi == 1346);
  CHECK_FALSE(t.rows[2].agree);
  CHECK(t.rows[3].agree);
}

TEST_CASE("presentations whose polynomial counts from the start") {
  CHECK(verify_presentation(testsupport::single_relation_n1(), 8).first_agreement_r == 0);
  CHECK(verify_presentation(testsupport::const_coeff_n3(), 5).first_agreement_r == 0);
  CHECK(verify_presentation({2, 1, {}}, 6).first_agreement_r == 0);
  CHECK(verify_presentation({1, 2, {}}, 6).first_agreement_r == 0);
}

TEST_CASE("agreement bookkeeping handles disagreement at the end") {
  // Truncating below the agreement threshold leaves no agreeing suffix.
  const DimensionTable t = verify_presentation(testsupport::pair_n2(), 2);
  CHECK(t.first_agreement_r == -1);
}

TEST_CASE("combinatorial count equals the per-generator point counts") {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform(1, 2);
    const int m = rng.uniform(1, 2);
    std::vector<ModuleElement> rels;
    const int count = rng.uniform(1, 3);
    for (int i = 0; i < count; ++i)
      rels.push_back(ModuleElement::monomial(
          n, m,
          ModuleMonomial(testsupport::low_degree_operator(rng, n, 3).leading().first,
                         rng.uniform(1, m))));
    const Basis g = buchberger(rels);
    const auto sets = leading_exponent_sets(g, n, m);
    for (int r = 0; r <= 6; ++r) {
      long long from_points = 0;
      for (const PointSet& a : sets) from_points += count_v_points(a, r);
      CHECK(count_standard_monomials(g, n, m, r) == from_points);
    }
  }
}

TEST_CASE("both dimension routes agree on random completed bases") {
  Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform(1, 2);
    const int m = rng.uniform(1, 2);
    std::vector<ModuleElement> rels;
    const int count = rng.uniform(1, 2);
    for (int i = 0; i < count; ++i) {
      std::vector<ModuleElement::Term> ts;
      const int terms = rng.uniform(1, 2);
      for (int j = 0; j < terms; ++j)
        ts.emplace_back(
            ModuleMonomial(testsupport::low_degree_operator(rng, n, 2).leading().first,
                           rng.uniform(1, m)),
            rng.coeff());
      ModuleElement f(n, m, std::move(ts));
      if (!f.is_zero()) rels.push_back(std::move(f));
    }
    if (rels.empty()) continue;
    const Basis g = buchberger(rels);
    const int r_max = n == 1 ? 6 : 4;
    for (int r = 0; r <= r_max; ++r)
      CHECK(rank_dimension(g, n, m, r) == count_standard_monomials(g, n, m, r));
  }
}
