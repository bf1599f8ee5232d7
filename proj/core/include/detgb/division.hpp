#pragma once

#include <optional>
#include <span>

#include "detgb/polynomial.hpp"

namespace detgb {

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor; p = sum q_i g_i + r
  std::uint64_t steps = 0;
};

// Multivariate division. Deterministic: always reduces the highest reducible
// term, choosing the divisor with the smallest index. No term of the
// remainder is divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors,
                      bool track_quotients);

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G);

// S(p,q) = (L/lt(p)) p - (L/lt(q)) q, L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);

// Quotient p/g when g divides p exactly; nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& g);

}  // namespace detgb
