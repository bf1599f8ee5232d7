#include <doctest.h>

#include <algorithm>

#include "support/test_util.hpp"

using namespace detgb;
using namespace detgb::test;

namespace {

std::vector<Polynomial> two_minors_2x3(const RingPtr& r) {
  return {pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
          pp(r, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
          pp(r, "x[1,2]*x[2,3] - x[1,3]*x[2,2]")};
}

}  // namespace

TEST_CASE("buchberger on already-reduced inputs") {
  RingPtr r = qring(2, 3);
  std::vector<Polynomial> gens{pp(r, "x[1,1]"), pp(r, "x[1,2]")};
  ReducedGB gb = buchberger(gens);
  REQUIRE(gb.size() == 2);
  CHECK(gb.members()[0] == gens[0]);
  CHECK(gb.members()[1] == gens[1]);
}

TEST_CASE("2-minors of X_{2x3} are their own reduced basis") {
  RingPtr r = qring(2, 3);
  std::vector<Polynomial> minors = two_minors_2x3(r);
  // Oracle: the Buchberger criterion run directly on the input.
  auto [ok, cert] = is_groebner(minors);
  CHECK(ok);
  CHECK(replay_certificate(minors, cert));

  ReducedGB gb = buchberger(minors);
  REQUIRE(gb.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(gb.members()[k] == minors[k]);
}

TEST_CASE("one S-pair reduction by hand") {
  RingPtr r = qring(2, 3);
  std::vector<Polynomial> gens{pp(r, "x[1,1]"),
                               pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")};
  ReducedGB gb = buchberger(gens);
  REQUIRE(gb.size() == 2);
  CHECK(gb.members()[0] == pp(r, "x[1,1]"));
  CHECK(gb.members()[1] == pp(r, "x[1,2]*x[2,1]"));
}

TEST_CASE("is_groebner spec examples") {
  RingPtr r = qring(2, 3);

  std::vector<Polynomial> single{pp(r, "x[1,1]*x[2,2] - 2*x[1,3]")};
  auto [ok_single, cert_single] = is_groebner(single);
  CHECK(ok_single);
  CHECK(cert_single.checks.empty());

  std::vector<Polynomial> bad{pp(r, "x[1,1]"),
                              pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")};
  auto [ok_bad, cert_bad] = is_groebner(bad);
  CHECK_FALSE(ok_bad);
  REQUIRE_FALSE(cert_bad.checks.empty());
  const PairCheck& failing = cert_bad.checks.back();
  CHECK(failing.remainder == pp(r, "x[1,2]*x[2,1]"));
  CHECK(replay_certificate(bad, cert_bad));
}

TEST_CASE("union of column-region and row-region 2-minors on X_{4x4}") {
  RingPtr r = qring(4, 4);
  IdealHandle cols = minors_ideal(r, {2, RegionSpec::cols(4, 1, 2)});
  IdealHandle rows = minors_ideal(r, {2, RegionSpec::rows(4, 1, 2)});
  std::vector<Polynomial> united = cols.generators();
  united.insert(united.end(), rows.generators().begin(), rows.generators().end());
  REQUIRE(united.size() == 6 + 6);
  auto [ok, cert] = is_groebner(united);
  CHECK(ok);
}

TEST_CASE("ideal membership") {
  RingPtr r = qring(2, 3);
  ReducedGB gb = buchberger(two_minors_2x3(r));
  CHECK(ideal_membership(two_minors_2x3(r)[1], gb));
  CHECK_FALSE(ideal_membership(Polynomial::from_int(r, 1), gb));

  // the minor on columns 1,3 belongs to the ideal
  std::uint32_t rows_idx[] = {1, 2};
  std::uint32_t cols_idx[] = {1, 3};
  Polynomial det13 = minor(r, rows_idx, cols_idx);
  CHECK(ideal_membership(det13, gb));
}

TEST_CASE("initial ideal spec examples") {
  RingPtr r23 = qring(2, 3);
  MonomialIdeal in23 = initial_ideal(buchberger(two_minors_2x3(r23)));
  REQUIRE(in23.min_gens().size() == 3);
  std::vector<Monomial> expected{mono(r23, {{1, 1}, {2, 2}}),
                                 mono(r23, {{1, 1}, {2, 3}}),
                                 mono(r23, {{1, 2}, {2, 3}})};
  for (const Monomial& m : expected) {
    CHECK(std::find(in23.min_gens().begin(), in23.min_gens().end(), m) !=
          in23.min_gens().end());
  }

  std::vector<Polynomial> principal{pp(r23, "x[1,1]")};
  MonomialIdeal in_var = initial_ideal(buchberger(principal));
  REQUIRE(in_var.min_gens().size() == 1);
  CHECK(in_var.min_gens()[0] == mono(r23, {{1, 1}}));

  RingPtr r22 = qring(2, 2);
  IdealHandle linear = minors_ideal(r22, {1, RegionSpec::full(2, 2)});
  MonomialIdeal in_linear = initial_ideal(linear.groebner_basis());
  CHECK(in_linear.min_gens().size() == 4);
}

TEST_CASE("reduced basis is unique under permutation and rescaling") {
  RingPtr r = qring(2, 3);
  std::vector<Polynomial> gens{pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
                               pp(r, "x[1,1]^2*x[2,3] - x[1,3]"),
                               pp(r, "x[1,2]*x[2,3] - x[1,3]*x[2,2]")};
  ReducedGB reference = buchberger(gens);
  std::mt19937 rng(59);
  std::uniform_int_distribution<long long> scale(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Polynomial> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (Polynomial& g : shuffled) {
      g = g.times_scalar(r->field().from_int(scale(rng)));
    }
    ReducedGB gb = buchberger(shuffled);
    CHECK(gb == reference);
  }
}

TEST_CASE("buchberger output is idempotent, sound, and certified") {
  RingPtr r = fpring(2, 3, 32003);
  std::vector<Polynomial> gens{pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
                               pp(r, "x[1,1]*x[1,2] - x[2,3]^2"),
                               pp(r, "x[2,1] + x[2,2]")};
  ReducedGB gb = buchberger(gens);

  ReducedGB again = buchberger(gb.members());
  CHECK(again == gb);

  for (const Polynomial& g : gens) {
    CHECK(normal_form(g, gb.members()).is_zero());
  }

  auto [ok, cert] = is_groebner(gb.members());
  CHECK(ok);
  CHECK(replay_certificate(gb.members(), cert));
}

TEST_CASE("is_groebner validates buchberger output on random ideals") {
  RingPtr rq = qring(2, 2);
  RingPtr rp = fpring(2, 2, 7);
  std::mt19937 rng(97);
  for (const RingPtr& r : {rq, rp}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2 + trial % 2; ++k) {
        gens.push_back(random_nonzero_poly(r, rng, 3, 2));
      }
      ReducedGB gb = buchberger(gens);
      if (gb.is_zero_ideal()) continue;
      auto [ok, cert] = is_groebner(gb.members());
      CHECK(ok);
      for (const Polynomial& g : gens) {
        CHECK(normal_form(g, gb.members()).is_zero());
      }
    }
  }
}

TEST_CASE("pair budget raises a distinct error") {
  RingPtr r = qring(2, 3);
  std::vector<Polynomial> gens{pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
                               pp(r, "x[1,1]*x[1,2] - x[2,3]^2"),
                               pp(r, "x[2,1]^2 + x[2,2]")};
  ResourceLimits limits;
  limits.max_pairs = 1;
  CHECK_THROWS_AS(buchberger(gens, limits), ResourceLimitError);
}

TEST_CASE("leading-monomial sets over Q and F_32003 agree on the minors fixture") {
  RingPtr rq = qring(2, 3);
  RingPtr rp = fpring(2, 3, 32003);
  MonomialIdeal in_q = initial_ideal(buchberger(two_minors_2x3(rq)));
  MonomialIdeal in_p = initial_ideal(buchberger(two_minors_2x3(rp)));
  REQUIRE(in_q.min_gens().size() == in_p.min_gens().size());
  for (std::size_t k = 0; k < in_q.min_gens().size(); ++k) {
    CHECK(in_q.min_gens()[k] == in_p.min_gens()[k]);
  }
}
