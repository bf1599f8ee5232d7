#include <doctest.h>

#include "support/test_util.hpp"

using namespace detgb;
using namespace detgb::test;

TEST_CASE("normal_form spec examples") {
  RingPtr r = qring(2, 3);
  Polynomial det = pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");

  // self-reduction
  std::vector<Polynomial> G{det};
  CHECK(normal_form(det, G).is_zero());

  // leading term does not divide: irreducible
  Polynomial anti = pp(r, "x[1,2]*x[2,1]");
  CHECK(normal_form(anti, G) == anti);

  // multiples reduce to zero
  CHECK(normal_form(pp(r, "x[2,2]") * det, G).is_zero());
}

TEST_CASE("division is deterministic: lowest-index divisor wins") {
  RingPtr r = qring(1, 3);
  Polynomial g0 = pp(r, "x[1,1] - x[1,2]");
  Polynomial g1 = pp(r, "x[1,1] - x[1,3]");
  std::vector<Polynomial> G{g0, g1};
  // x[1,1] reduces by g0 first, leaving x[1,2] (irreducible).
  CHECK(normal_form(pp(r, "x[1,1]"), G) == pp(r, "x[1,2]"));
  std::vector<Polynomial> G_rev{g1, g0};
  CHECK(normal_form(pp(r, "x[1,1]"), G_rev) == pp(r, "x[1,3]"));
}

TEST_CASE("division reconstructs the dividend from quotients") {
  RingPtr rq = qring(2, 2);
  RingPtr rp = fpring(2, 2, 7);
  std::mt19937 rng(31);
  for (const RingPtr& r : {rq, rp}) {
    for (int trial = 0; trial < 120; ++trial) {
      Polynomial p = random_poly(r, rng, 5, 3);
      std::vector<Polynomial> G;
      int divisors = 1 + (trial % 3);
      for (int k = 0; k < divisors; ++k) {
        G.push_back(random_nonzero_poly(r, rng, 3, 2));
      }
      DivisionResult res = divide(p, G, /*track_quotients=*/true);
      Polynomial rebuilt = res.remainder;
      for (std::size_t k = 0; k < G.size(); ++k) {
        rebuilt = rebuilt + res.quotients[k] * G[k];
      }
      CHECK(rebuilt == p);
      // no term of the remainder is divisible by any leading monomial
      for (const Term& t : res.remainder.terms()) {
        for (const Polynomial& g : G) {
          CHECK_FALSE(g.leading_monomial().divides(t.monomial));
        }
      }
    }
  }
}

TEST_CASE("s_polynomial spec examples") {
  RingPtr r = qring(2, 3);
  Polynomial det = pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");

  CHECK(s_polynomial(det, det).is_zero());

  // coprime monomial inputs cancel exactly
  CHECK(s_polynomial(pp(r, "x[1,1]"), pp(r, "x[2,2]")).is_zero());

  // one-step hand computation
  CHECK(s_polynomial(pp(r, "x[1,1]"), det) == pp(r, "x[1,2]*x[2,1]"));

  CHECK_THROWS_AS(s_polynomial(Polynomial::zero(r), det), DomainError);
}

TEST_CASE("lt of a nonzero S-polynomial drops below the lcm") {
  RingPtr r = qring(2, 2);
  std::mt19937 rng(43);
  const TermOrder& order = r->order();
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 120; ++trial) {
    Polynomial p = random_nonzero_poly(r, rng, 4, 2);
    Polynomial q = random_nonzero_poly(r, rng, 4, 2);
    Polynomial s = s_polynomial(p, q);
    if (s.is_zero()) continue;
    ++seen;
    Monomial L = Monomial::lcm(p.leading_monomial(), q.leading_monomial());
    CHECK(order.compare(s.leading_monomial(), L) == std::strong_ordering::less);
  }
  CHECK(seen >= 50);
}

TEST_CASE("divide_exact recognizes multiples") {
  RingPtr r = qring(2, 3);
  Polynomial det = pp(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
  Polynomial q = pp(r, "x[1,3]^2 - 3*x[2,1]");
  auto quotient = divide_exact(det * q, det);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == q);
  CHECK_FALSE(divide_exact(det * q + Polynomial::from_int(r, 1), det).has_value());
}
