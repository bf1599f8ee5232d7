#pragma once

#include <span>

#include "detgb/division.hpp"
#include "detgb/limits.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/polynomial.hpp"

namespace detgb {

struct GBStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t max_basis_size = 0;
};

// The reduced Groebner basis of an ideal under the ring's term order:
// members monic, auto-reduced, sorted by leading monomial descending.
// Uniquely determined by the ideal and the order.
class ReducedGB {
 public:
  ReducedGB(RingPtr ring, std::vector<Polynomial> members, GBStats stats)
      : ring_(std::move(ring)), members_(std::move(members)), stats_(stats) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const GBStats& stats() const noexcept { return stats_; }
  // Buchberger always interreduces before returning; the flag travels with
  // the basis so certificates can state it.
  bool auto_reduced() const noexcept { return true; }

  bool is_unit_ideal() const {
    return members_.size() == 1 && members_[0].is_constant();
  }
  bool is_zero_ideal() const noexcept { return members_.empty(); }

  bool operator==(const ReducedGB& other) const {
    return members_ == other.members_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> members_;
  GBStats stats_;
};

// Buchberger's algorithm with the coprimality and chain (Gebauer-Moeller)
// criteria, normal pair selection, and final interreduction. The output is
// the reduced basis, identical for any permutation or rescaling of gens.
ReducedGB buchberger(std::span<const Polynomial> gens,
                     const ResourceLimits& limits = {});

// One S-pair check inside a Groebner certificate.
struct PairCheck {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  bool skipped_coprime = false;
  Polynomial remainder;
};

// Replayable evidence for an is_groebner verdict: every recorded pair, its
// remainder (zero throughout for a positive verdict; the final entry carries
// the first nonzero remainder for a negative one).
struct GBCertificate {
  bool is_basis = false;
  std::vector<PairCheck> checks;
};

// Buchberger criterion as a verification primitive: true iff every S-pair of
// gens reduces to 0 modulo gens. Pairs with coprime leading monomials are
// skipped but recorded.
std::pair<bool, GBCertificate> is_groebner(std::span<const Polynomial> gens,
                                           const ResourceLimits& limits = {});

// Re-runs every reduction recorded in the certificate against gens and
// checks the remainders match. Used by tests and by report consumers.
bool replay_certificate(std::span<const Polynomial> gens,
                        const GBCertificate& cert);

bool ideal_membership(const Polynomial& p, const ReducedGB& gb);

// Minimal generators of the initial ideal: the leading monomials of the
// reduced basis, minimalized.
MonomialIdeal initial_ideal(const ReducedGB& gb);

}  // namespace detgb
