#pragma once

#include <memory>
#include <mutex>

#include "detgb/groebner.hpp"

namespace detgb {

// An ideal: generator list plus the provenance expression that built it.
// The reduced Groebner basis under the ring's ambient order is computed
// lazily and cached write-once; copies of a handle share the cache.
class IdealHandle {
 public:
  static IdealHandle from_generators(RingPtr ring, std::vector<Polynomial> gens,
                                     std::string provenance);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::string& provenance() const noexcept { return provenance_; }

  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  // Cheap syntactic unit test: some generator is a nonzero constant.
  bool has_constant_generator() const;

  const ReducedGB& groebner_basis(const ResourceLimits& limits = {}) const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const ReducedGB> gb;
  };

  IdealHandle(RingPtr ring, std::vector<Polynomial> gens, std::string provenance)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        provenance_(std::move(provenance)),
        cache_(std::make_shared<Cache>()) {}

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::string provenance_;
  std::shared_ptr<Cache> cache_;
};

IdealHandle unit_ideal(RingPtr ring);
IdealHandle zero_ideal(RingPtr ring);

// Generators concatenated; provenance records the sum.
IdealHandle sum(const IdealHandle& A, const IdealHandle& B);

// A intersect B via one auxiliary variable u ranked above everything:
// eliminate u from u*A + (1-u)*B and re-embed into the original ring.
IdealHandle intersect(const IdealHandle& A, const IdealHandle& B,
                      const ResourceLimits& limits = {});

// A : (g), computed as (A intersect (g)) with every generator divided
// exactly by g. Exact-division failure would violate the construction and
// throws Error.
IdealHandle quotient_by_poly(const IdealHandle& A, const Polynomial& g,
                             const ResourceLimits& limits = {});

// A : B = intersection of A : (g) over the generators g of B.
IdealHandle quotient(const IdealHandle& A, const IdealHandle& B,
                     const ResourceLimits& limits = {});

// Generators of A ∩ K[vars-complement]: Groebner basis members free of
// `vars` under a block order ranking `vars` first.
IdealHandle eliminate(const IdealHandle& A, const std::vector<std::size_t>& vars,
                      const ResourceLimits& limits = {});

// Iterated colon by g until stable; bounded at 64 iterations.
IdealHandle saturate(const IdealHandle& A, const Polynomial& g,
                     const ResourceLimits& limits = {});

// True iff the reduced Groebner bases coincide exactly.
bool ideal_equal(const IdealHandle& A, const IdealHandle& B,
                 const ResourceLimits& limits = {});

bool ideal_membership(const Polynomial& p, const IdealHandle& A,
                      const ResourceLimits& limits = {});

// Height of A via its initial ideal: var_count - dim of in(A).
int height_via_initial(const IdealHandle& A, const ResourceLimits& limits = {});

}  // namespace detgb
