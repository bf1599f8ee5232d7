#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/ring.hpp"

namespace detgb {

struct Term {
  Monomial monomial;
  Scalar coeff;
};

// Exact sparse multivariate polynomial. Terms are strictly descending under
// the ring's term order and never carry a zero coefficient; the zero
// polynomial is the empty term list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Scalar value);
  static Polynomial from_int(RingPtr ring, long long value);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial term(RingPtr ring, Monomial monomial, Scalar coeff);
  // Canonicalizes: sorts, merges duplicate monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  std::uint64_t degree() const;  // max term degree; 0 for the zero polynomial

  // Order-maximal term. Throws DomainError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;

  Polynomial times_term(const Monomial& monomial, const Scalar& coeff) const;
  Polynomial times_scalar(const Scalar& coeff) const;
  Polynomial monic() const;  // divide by leading coefficient
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Textual form: `x[1,1]*x[2,2] - x[1,2]*x[2,1]`, exponents with `^`.
  std::string to_string() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

  // Re-interpret in a structurally identical ring that may use a different
  // term order (same variables, same field). Terms are re-sorted.
  Polynomial in_ring(RingPtr other) const;

  // Lift into the aux-extended ring / project back (aux exponent must be 0).
  Polynomial lifted_to(RingPtr extended) const;
  Polynomial projected_to(RingPtr base) const;

  // Canonical-form invariant; cheap enough to assert in tests.
  bool well_formed() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

}  // namespace detgb
