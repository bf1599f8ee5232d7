#include <doctest.h>

#include "support/test_util.hpp"

using namespace detgb;
using namespace detgb::test;

TEST_CASE("minor construction") {
  RingPtr r = qring(3, 4);

  std::uint32_t one_r[] = {2};
  std::uint32_t one_c[] = {3};
  CHECK(minor(r, one_r, one_c) == pp(r, "x[2,3]"));

  std::uint32_t rr[] = {1, 2};
  std::uint32_t cc[] = {1, 2};
  CHECK(minor(r, rr, cc) == pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"));

  std::uint32_t bad_r[] = {2, 1};
  CHECK_THROWS_AS(minor(r, bad_r, cc), DomainError);
  std::uint32_t oob_c[] = {1, 5};
  CHECK_THROWS_AS(minor(r, rr, oob_c), DomainError);
  std::uint32_t short_c[] = {1};
  CHECK_THROWS_AS(minor(r, rr, short_c), DomainError);
}

TEST_CASE("minors_ideal generator counts") {
  RingPtr r22 = qring(2, 2);
  CHECK(minors_ideal(r22, {1, RegionSpec::full(2, 2)}).generators().size() == 4);

  RingPtr r23 = qring(2, 3);
  CHECK(minors_ideal(r23, {2, RegionSpec::full(2, 3)}).generators().size() == 3);

  RingPtr r66 = qring(6, 6);
  IdealHandle ladder = minors_ideal(r66, {3, RegionSpec::cols(6, 1, 3)});
  CHECK(ladder.generators().size() == 20);  // C(6,3) * C(3,3)

  CHECK_THROWS_AS(minors_ideal(r23, {3, RegionSpec::full(2, 3)}), DomainError);
  CHECK_THROWS_AS(minors_ideal(r23, {2, RegionSpec{1, 4, 1, 2}}), DomainError);
}

TEST_CASE("minors enumeration order is row-set then column-set lexicographic") {
  RingPtr r = qring(3, 3);
  IdealHandle I = minors_ideal(r, {2, RegionSpec::full(3, 3)});
  REQUIRE(I.generators().size() == 9);
  // First generator: rows {1,2}, cols {1,2}; second: rows {1,2}, cols {1,3}.
  CHECK(I.generators()[0] == pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
  CHECK(I.generators()[1] == pp(r, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"));
  // Fourth: rows {1,3}, cols {1,2}.
  CHECK(I.generators()[3] == pp(r, "x[1,1]*x[3,2] - x[1,2]*x[3,1]"));
}

TEST_CASE("knutson_f on X_{2x3} matches the displayed factorization") {
  RingPtr r = qring(2, 3);
  KnutsonPolynomial kf = knutson_f(r);
  REQUIRE(kf.factors.size() == 4);
  CHECK(kf.factors[0] == pp(r, "x[2,1]"));
  CHECK(kf.factors[1] == pp(r, "x[1,3]"));
  CHECK(kf.factors[2] == pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
  CHECK(kf.factors[3] == pp(r, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"));

  Polynomial product = Polynomial::from_int(r, 1);
  for (const Polynomial& factor : kf.factors) product = product * factor;
  CHECK(kf.f == product);

  // lt(f) is the squarefree product of all six variables.
  Monomial expected = mono(r, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  CHECK(kf.f.leading_monomial() == expected);
  CHECK(kf.f.leading_monomial().is_squarefree());
  CHECK(r->field().is_one(kf.f.leading_coeff()));
}

TEST_CASE("knutson_f factor counts and preconditions") {
  CHECK(knutson_f(qring(3, 4)).factors.size() == 6);  // 4 corners + 2 windows
  CHECK(knutson_f(qring(2, 4)).factors.size() == 5);  // 2 corners + 3 windows
  CHECK_THROWS_AS(knutson_f(qring(3, 3)), DomainError);
  CHECK_THROWS_AS(knutson_f(qring(4, 3)), DomainError);
  CHECK_THROWS_AS(knutson_f(qring(1, 3)), DomainError);
}

TEST_CASE("lemma_H case 1 on (3,4), t=2, i=2") {
  RingPtr r = qring(3, 4);
  IdealHandle H = lemma_H(r, 2, 2);
  REQUIRE(H.generators().size() == 2);
  std::uint32_t rows[] = {1, 2, 3};
  std::uint32_t c24[] = {2, 3, 4};
  std::uint32_t c13[] = {1, 2, 3};
  CHECK(H.generators()[0] == minor(r, rows, c24));
  CHECK(H.generators()[1] == minor(r, rows, c13));
}

TEST_CASE("lemma_H case 2 on (3,4), t=2, i=1") {
  RingPtr r = qring(3, 4);
  IdealHandle H = lemma_H(r, 2, 1);
  REQUIRE(H.generators().size() == 2);
  std::uint32_t rows[] = {1, 2, 3};
  std::uint32_t c13[] = {1, 2, 3};
  CHECK(H.generators()[0] == minor(r, rows, c13));
  // lower-left 2x2 corner: rows {2,3}, cols {1,2}
  std::uint32_t r23[] = {2, 3};
  std::uint32_t c12[] = {1, 2};
  CHECK(H.generators()[1] == minor(r, r23, c12));
}

TEST_CASE("lemma_H generators are factors of f, coprime, of height m-t+1") {
  for (auto [m, n] : {std::pair<std::uint32_t, std::uint32_t>{3, 4},
                      std::pair<std::uint32_t, std::uint32_t>{3, 5}}) {
    RingPtr r = qring(m, n);
    KnutsonPolynomial kf = knutson_f(r);
    for (std::uint32_t t = 1; t <= m; ++t) {
      for (std::uint32_t i = 1; i + t <= n + 1; ++i) {
        CAPTURE(m); CAPTURE(n); CAPTURE(t); CAPTURE(i);
        IdealHandle H = lemma_H(r, t, i);
        CHECK(H.generators().size() == m - t + 1);

        std::vector<Monomial> lms;
        for (const Polynomial& g : H.generators()) {
          lms.push_back(g.leading_monomial());
          bool is_factor = false;
          for (const Polynomial& factor : kf.factors) {
            if (g == factor) is_factor = true;
          }
          CHECK(is_factor);
        }
        CHECK(pairwise_coprime(lms));
        CHECK(height_via_initial(H) == static_cast<int>(m - t + 1));

        IdealHandle It = minors_ideal(r, {t, RegionSpec::cols(m, i, t + i - 1)});
        for (const Polynomial& g : H.generators()) {
          CHECK(ideal_membership(g, It));
        }
      }
    }
  }
}

TEST_CASE("diagonal order detection") {
  CHECK(is_diagonal_order(TermOrder::row_major_lex(3, 4), 3, 4, 3));
  CHECK_FALSE(is_diagonal_order(TermOrder::row_major_degrevlex(2, 2), 2, 2, 2));
  CHECK(is_diagonal_order(TermOrder::row_major_degrevlex(2, 2), 2, 2, 1));
}

TEST_CASE("check_decomposition spec instances") {
  RingPtr r = qring(3, 4);

  Report displayed = check_decomposition(r, 2, 1, 3);
  CHECK(displayed.verdict == Verdict::pass);

  Report widened = check_decomposition(r, 2, 1, 4);
  CHECK(widened.verdict == Verdict::pass);

  Report trivial = check_decomposition(r, 1, 1, 2);
  CHECK(trivial.verdict == Verdict::pass);

  CHECK_THROWS_AS(check_decomposition(r, 3, 1, 3), DomainError);
}

TEST_CASE("check_decomposition row-interval variant") {
  RingPtr r = qring(3, 5);
  Report report = check_decomposition(r, 2, 1, 3, Axis::rows);
  CHECK(report.verdict == Verdict::pass);
}

TEST_CASE("a corrupted decomposition claim fails with an unequal-GB witness") {
  RingPtr r = qring(3, 4);
  IdealHandle lhs = sum(minors_ideal(r, {2, RegionSpec::cols(3, 1, 2)}),
                        minors_ideal(r, {2, RegionSpec::cols(3, 2, 3)}));
  // wrong inner ideal: column 3 instead of column 2
  IdealHandle rhs = intersect(minors_ideal(r, {2, RegionSpec::cols(3, 1, 3)}),
                              minors_ideal(r, {1, RegionSpec::cols(3, 3, 3)}));
  Report report = check_ideal_equality(lhs, rhs);
  CHECK(report.verdict == Verdict::fail);
  REQUIRE(report.certificate.contains("witness"));
  CHECK_FALSE(report.certificate["witness"].is_null());
  REQUIRE(report.certificate["witness"].contains("member"));

  // The witness replays: parse it back and confirm it separates the sides.
  Polynomial member = Polynomial::parse(
      r, report.certificate["witness"]["member"].get<std::string>());
  std::string side = report.certificate["witness"]["side"].get<std::string>();
  if (side == "lhs-only") {
    CHECK(ideal_membership(member, lhs));
    CHECK_FALSE(ideal_membership(member, rhs));
  } else {
    CHECK(ideal_membership(member, rhs));
    CHECK_FALSE(ideal_membership(member, lhs));
  }
}

TEST_CASE("equality witness separates ideals even when one contains the other") {
  // (x+y) sits inside (x, y): the lhs basis member x+y belongs to the rhs
  // ideal, so the witness must come from the rhs side with membership
  // evidence, not from a bare list diff.
  RingPtr r = qring(1, 2);
  IdealHandle small = IdealHandle::from_generators(
      r, {pp(r, "x[1,1] + x[1,2]")}, "(x+y)");
  IdealHandle big = IdealHandle::from_generators(
      r, {pp(r, "x[1,1]"), pp(r, "x[1,2]")}, "(x,y)");
  Report report = check_ideal_equality(small, big);
  REQUIRE(report.verdict == Verdict::fail);
  const Json& witness = report.certificate["witness"];
  REQUIRE_FALSE(witness.is_null());
  CHECK(witness["side"] == "rhs-only");
  Polynomial member = pp(r, witness["member"].get<std::string>());
  Polynomial remainder = pp(r, witness["remainder"].get<std::string>());
  CHECK_FALSE(ideal_membership(member, small));
  CHECK(normal_form(member, small.groebner_basis().members()) == remainder);
}

TEST_CASE("check_union_gb on a single region and the 4x4 analogue") {
  RingPtr r = qring(4, 4);

  std::vector<MinorsIdealSpec> single{{2, RegionSpec::cols(4, 1, 2)}};
  Report single_report = check_union_gb(r, single);
  CHECK(single_report.verdict == Verdict::pass);

  std::vector<MinorsIdealSpec> four{{2, RegionSpec::cols(4, 1, 2)},
                                    {2, RegionSpec::rows(4, 1, 2)},
                                    {2, RegionSpec::cols(4, 3, 4)},
                                    {2, RegionSpec::rows(4, 3, 4)}};
  Report four_report = check_union_gb(r, four);
  CHECK(four_report.verdict == Verdict::pass);
  CHECK(four_report.certificate["union"]["is_basis"] == true);
}

TEST_CASE("check_union_gb rejects general rectangles and non-diagonal orders") {
  RingPtr r = qring(4, 4);
  std::vector<MinorsIdealSpec> rect{{2, RegionSpec{1, 2, 1, 2}}};
  CHECK_THROWS_AS(check_union_gb(r, rect), DomainError);

  RingPtr drl = make_ring(4, 4, Field::rationals(),
                          TermOrder::row_major_degrevlex(4, 4));
  std::vector<MinorsIdealSpec> ok{{2, RegionSpec::cols(4, 1, 2)}};
  CHECK_THROWS_AS(check_union_gb(drl, ok), DomainError);
}

TEST_CASE("region notation") {
  CHECK(RegionSpec::full(3, 4).to_string(3, 4) == "X");
  CHECK(RegionSpec::cols(3, 1, 2).to_string(3, 4) == "X[cols=1..2]");
  CHECK(RegionSpec::rows(4, 2, 3).to_string(3, 4) == "X[rows=2..3]");
  CHECK((RegionSpec{2, 4, 1, 2}).to_string(3, 4) == "X[rows=1..2, cols=2..4]");
}
