#include "detgb/division.hpp"

namespace detgb {

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors,
                      bool track_quotients) {
  const RingPtr& ring = p.ring();
  const Field& field = ring->field();
  for (const Polynomial& g : divisors) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) throw DomainError("zero divisor in division");
  }

  DivisionResult out{Polynomial::zero(ring), {}, 0};
  if (track_quotients) {
    out.quotients.assign(divisors.size(), Polynomial::zero(ring));
  }

  std::vector<Term> remainder_terms;
  Polynomial h = p;
  while (!h.is_zero()) {
    const Term& lead = h.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Polynomial& g = divisors[k];
      if (!g.leading_monomial().divides(lead.monomial)) continue;
      Monomial shift = lead.monomial.divided_by(g.leading_monomial());
      Scalar factor = field.div(lead.coeff, g.leading_coeff());
      h = h - g.times_term(shift, factor);
      if (track_quotients) {
        out.quotients[k] =
            out.quotients[k] + Polynomial::term(ring, std::move(shift), factor);
      }
      ++out.steps;
      reduced = true;
      break;
    }
    if (!reduced) {
      // Leading term irreducible: it moves to the remainder. Terms arrive in
      // strictly decreasing order, so the remainder list stays canonical.
      remainder_terms.push_back(lead);
      h = h - Polynomial::term(ring, lead.monomial, lead.coeff);
    }
  }
  out.remainder = Polynomial::from_terms(ring, std::move(remainder_terms));
  return out;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G) {
  return divide(p, G, /*track_quotients=*/false).remainder;
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring(), q.ring());
  if (p.is_zero() || q.is_zero()) {
    throw DomainError("s_polynomial requires nonzero inputs");
  }
  const Field& field = p.ring()->field();
  Monomial L = Monomial::lcm(p.leading_monomial(), q.leading_monomial());
  Polynomial left =
      p.times_term(L.divided_by(p.leading_monomial()), field.inv(p.leading_coeff()));
  Polynomial right =
      q.times_term(L.divided_by(q.leading_monomial()), field.inv(q.leading_coeff()));
  return left - right;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& g) {
  require_same_ring(p.ring(), g.ring());
  if (g.is_zero()) throw DomainError("exact division by zero");
  const Polynomial divisors[] = {g};
  DivisionResult res = divide(p, divisors, /*track_quotients=*/true);
  if (!res.remainder.is_zero()) return std::nullopt;
  return res.quotients[0];
}

}  // namespace detgb
