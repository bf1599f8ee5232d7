#pragma once

#include <functional>
#include <sstream>

#include "detgb/commands.hpp"
#include "support/test_util.hpp"

namespace detgb::test {

struct PropertyResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Reduced-basis uniqueness: permuting and rescaling the generators never
// changes the output basis.
inline PropertyResult prop_gb_unique_under_permutation(int shuffles_per_fixture) {
  PropertyResult result{"reduced-gb-unique-under-permutation", true, ""};
  RingPtr r23 = qring(2, 3);
  RingPtr rp24 = fpring(2, 4, 32003);

  std::vector<std::vector<Polynomial>> fixtures;
  fixtures.push_back(minors_ideal(r23, {2, RegionSpec::full(2, 3)}).generators());
  fixtures.push_back({pp(r23, "x[1,1]"),
                      pp(r23, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
                      pp(r23, "x[1,2]*x[2,3]^2 - x[1,3]")});
  fixtures.push_back(minors_ideal(rp24, {2, RegionSpec::full(2, 4)}).generators());

  std::mt19937 rng(101);
  int checked = 0;
  for (const auto& gens : fixtures) {
    const Field& field = gens.front().ring()->field();
    ReducedGB reference = buchberger(gens);
    std::uniform_int_distribution<long long> scale(1, 11);
    for (int trial = 0; trial < shuffles_per_fixture; ++trial) {
      std::vector<Polynomial> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (Polynomial& g : shuffled) {
        g = g.times_scalar(field.from_int(scale(rng)));
      }
      if (!(buchberger(shuffled) == reference)) {
        result.ok = false;
        result.detail = "basis changed under permutation";
        return result;
      }
      ++checked;
    }
  }
  std::ostringstream os;
  os << checked << " shuffles across " << fixtures.size() << " fixtures";
  result.detail = os.str();
  return result;
}

// p = sum q_i g_i + r reconstruction with irreducible remainder.
inline PropertyResult prop_division_reconstruction(int instances) {
  PropertyResult result{"division-reconstruction", true, ""};
  RingPtr rq = qring(2, 2);
  RingPtr rp = fpring(2, 2, 7);
  std::mt19937 rng(103);
  int done = 0;
  for (const RingPtr& r : {rq, rp}) {
    for (int trial = 0; trial < instances / 2; ++trial) {
      Polynomial p = random_poly(r, rng, 5, 3);
      std::vector<Polynomial> G;
      for (int k = 0; k <= trial % 3; ++k) {
        G.push_back(random_nonzero_poly(r, rng, 3, 2));
      }
      DivisionResult res = divide(p, G, true);
      Polynomial rebuilt = res.remainder;
      for (std::size_t k = 0; k < G.size(); ++k) {
        rebuilt = rebuilt + res.quotients[k] * G[k];
      }
      if (rebuilt != p) {
        result.ok = false;
        result.detail = "dividend not reconstructed";
        return result;
      }
      for (const Term& t : res.remainder.terms()) {
        for (const Polynomial& g : G) {
          if (g.leading_monomial().divides(t.monomial)) {
            result.ok = false;
            result.detail = "reducible term left in remainder";
            return result;
          }
        }
      }
      ++done;
    }
  }
  result.detail = std::to_string(done) + " random divisions";
  return result;
}

// Membership in A ∩ B coincides with membership in both, and the computed
// intersection generators live in both ideals.
inline PropertyResult prop_intersection_membership(int instances) {
  PropertyResult result{"intersection-membership-equivalence", true, ""};
  RingPtr r = qring(2, 2);
  std::mt19937 rng(107);
  int done = 0;
  for (int trial = 0; trial < instances; ++trial) {
    std::vector<Polynomial> agens{random_nonzero_poly(r, rng, 3, 2)};
    if (trial % 2 == 0) agens.push_back(random_nonzero_poly(r, rng, 2, 1));
    std::vector<Polynomial> bgens{random_nonzero_poly(r, rng, 3, 2)};
    IdealHandle A = IdealHandle::from_generators(r, agens, "A");
    IdealHandle B = IdealHandle::from_generators(r, bgens, "B");
    IdealHandle meet = intersect(A, B);

    for (const Polynomial& g : meet.generators()) {
      if (!ideal_membership(g, A) || !ideal_membership(g, B)) {
        result.ok = false;
        result.detail = "intersection generator escapes a side";
        return result;
      }
    }
    Polynomial probe = random_poly(r, rng, 3, 2);
    bool in_meet = ideal_membership(probe, meet);
    bool in_both = ideal_membership(probe, A) && ideal_membership(probe, B);
    if (in_meet != in_both) {
      result.ok = false;
      result.detail = "membership equivalence violated for probe " +
                      probe.to_string();
      return result;
    }
    ++done;
  }
  result.detail = std::to_string(done) + " random intersections";
  return result;
}

// A ⊆ A : B and (A : B) · B ⊆ A.
inline PropertyResult prop_quotient_containment(int instances) {
  PropertyResult result{"quotient-containment", true, ""};
  RingPtr r = qring(2, 2);
  std::mt19937 rng(109);
  int done = 0;
  for (int trial = 0; trial < instances; ++trial) {
    IdealHandle A = IdealHandle::from_generators(
        r, {random_nonzero_poly(r, rng, 3, 2), random_nonzero_poly(r, rng, 2, 2)},
        "A");
    IdealHandle B = IdealHandle::from_generators(
        r, {random_nonzero_poly(r, rng, 2, 1)}, "B");
    IdealHandle colon = quotient(A, B);

    for (const Polynomial& g : A.generators()) {
      if (!ideal_membership(g, colon)) {
        result.ok = false;
        result.detail = "A not contained in A:B";
        return result;
      }
    }
    for (const Polynomial& q : colon.generators()) {
      for (const Polynomial& b : B.generators()) {
        if (!ideal_membership(q * b, A)) {
          result.ok = false;
          result.detail = "(A:B)*B escapes A";
          return result;
        }
      }
    }
    ++done;
  }
  result.detail = std::to_string(done) + " random colon ideals";
  return result;
}

// Random grammar-expressible trees survive print + reparse unchanged.
inline PropertyResult prop_parser_roundtrip(int instances) {
  PropertyResult result{"parser-roundtrip", true, ""};
  std::mt19937 rng(113);
  std::uniform_int_distribution<std::uint32_t> dim(2, 6);

  auto random_region = [&](std::uint32_t m, std::uint32_t n) {
    std::uniform_int_distribution<int> shape(0, 2);
    auto rand_interval = [&](std::uint32_t hi) {
      std::uniform_int_distribution<std::uint32_t> lo_dist(1, hi);
      std::uint32_t lo = lo_dist(rng);
      std::uniform_int_distribution<std::uint32_t> hi_dist(lo, hi);
      return std::pair<std::uint32_t, std::uint32_t>{lo, hi_dist(rng)};
    };
    switch (shape(rng)) {
      case 0: return RegionSpec::full(m, n);
      case 1: {
        auto [lo, hi] = rand_interval(n);
        return RegionSpec::cols(m, lo, hi);
      }
      default: {
        auto [lo, hi] = rand_interval(m);
        return RegionSpec::rows(n, lo, hi);
      }
    }
  };

  auto random_minors = [&](std::uint32_t m, std::uint32_t n) {
    RegionSpec region = random_region(m, n);
    std::uint32_t tmax = std::min(region.row_count(), region.col_count());
    std::uniform_int_distribution<std::uint32_t> t_dist(1, tmax);
    return IdealExpr::minors(MinorsIdealSpec{t_dist(rng), region});
  };

  std::function<IdealExpr(std::uint32_t, std::uint32_t, int)> random_tree =
      [&](std::uint32_t m, std::uint32_t n, int depth) -> IdealExpr {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 3);
    switch (kind(rng)) {
      case 1: {
        std::uniform_int_distribution<int> arity(2, 3);
        std::vector<IdealExpr> children;
        for (int k = arity(rng); k > 0; --k) {
          children.push_back(random_tree(m, n, depth - 1));
        }
        return IdealExpr::sum_of(std::move(children));
      }
      case 2: {
        std::vector<IdealExpr> children;
        children.push_back(random_tree(m, n, depth - 1));
        children.push_back(random_tree(m, n, depth - 1));
        return IdealExpr::intersect_of(std::move(children));
      }
      case 3:
        return IdealExpr::colon_of(random_tree(m, n, depth - 1),
                                   random_tree(m, n, depth - 1));
      default:
        return random_minors(m, n);
    }
  };

  for (int trial = 0; trial < instances; ++trial) {
    std::uint32_t m = dim(rng), n = dim(rng);
    IdealExpr ast = random_tree(m, n, 3);
    std::string text = ast.print(m, n);
    try {
      IdealExpr reparsed = parse_ideal_expr(text, m, n);
      if (reparsed != ast) {
        result.ok = false;
        result.detail = "round-trip changed the tree for: " + text;
        return result;
      }
    } catch (const ParseError& e) {
      result.ok = false;
      result.detail = "printed tree failed to parse: " + text + " (" +
                      e.what() + ")";
      return result;
    }
  }
  result.detail = std::to_string(instances) + " random trees";
  return result;
}

}  // namespace detgb::test
