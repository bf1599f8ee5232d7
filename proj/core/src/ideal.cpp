#include "detgb/ideal.hpp"

#include <algorithm>

namespace detgb {

IdealHandle IdealHandle::from_generators(RingPtr ring,
                                         std::vector<Polynomial> gens,
                                         std::string provenance) {
  std::vector<Polynomial> kept;
  kept.reserve(gens.size());
  for (Polynomial& g : gens) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  return IdealHandle(std::move(ring), std::move(kept), std::move(provenance));
}

bool IdealHandle::has_constant_generator() const {
  for (const Polynomial& g : gens_) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

const ReducedGB& IdealHandle::groebner_basis(const ResourceLimits& limits) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->gb == nullptr) {
    if (gens_.empty()) {
      cache_->gb = std::make_shared<const ReducedGB>(ring_, std::vector<Polynomial>{},
                                                     GBStats{});
    } else {
      cache_->gb = std::make_shared<const ReducedGB>(buchberger(gens_, limits));
    }
  }
  return *cache_->gb;
}

IdealHandle unit_ideal(RingPtr ring) {
  std::vector<Polynomial> gens;
  gens.push_back(Polynomial::from_int(ring, 1));
  return IdealHandle::from_generators(std::move(ring), std::move(gens), "unit");
}

IdealHandle zero_ideal(RingPtr ring) {
  return IdealHandle::from_generators(std::move(ring), {}, "zero");
}

IdealHandle sum(const IdealHandle& A, const IdealHandle& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<Polynomial> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return IdealHandle::from_generators(
      A.ring(), std::move(gens),
      "sum(" + A.provenance() + ", " + B.provenance() + ")");
}

IdealHandle intersect(const IdealHandle& A, const IdealHandle& B,
                      const ResourceLimits& limits) {
  require_same_ring(A.ring(), B.ring());
  std::string provenance =
      "intersect(" + A.provenance() + ", " + B.provenance() + ")";

  if (A.is_zero_ideal() || B.is_zero_ideal()) {
    return IdealHandle::from_generators(A.ring(), {}, std::move(provenance));
  }
  if (A.has_constant_generator()) {
    return IdealHandle::from_generators(A.ring(), B.generators(),
                                        std::move(provenance));
  }
  if (B.has_constant_generator()) {
    return IdealHandle::from_generators(A.ring(), A.generators(),
                                        std::move(provenance));
  }

  RingPtr ext = A.ring()->extended();
  Polynomial u = Polynomial::variable(ext, ext->aux_index());
  Polynomial one_minus_u = Polynomial::from_int(ext, 1) - u;

  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() + B.generators().size());
  for (const Polynomial& a : A.generators()) gens.push_back(u * a.lifted_to(ext));
  for (const Polynomial& b : B.generators()) {
    gens.push_back(one_minus_u * b.lifted_to(ext));
  }

  ReducedGB gb = buchberger(gens, limits);
  std::vector<Polynomial> result;
  for (const Polynomial& g : gb.members()) {
    bool involves_u = false;
    for (const Term& t : g.terms()) {
      if (t.monomial.exponent(ext->aux_index()) > 0) {
        involves_u = true;
        break;
      }
    }
    if (!involves_u) result.push_back(g.projected_to(A.ring()));
  }
  return IdealHandle::from_generators(A.ring(), std::move(result),
                                      std::move(provenance));
}

IdealHandle quotient_by_poly(const IdealHandle& A, const Polynomial& g,
                             const ResourceLimits& limits) {
  require_same_ring(A.ring(), g.ring());
  if (g.is_zero()) throw DomainError("colon by the zero polynomial");
  std::string provenance = "colon(" + A.provenance() + ", (" + g.to_string() + "))";

  std::vector<Polynomial> gens_g;
  gens_g.push_back(g);
  IdealHandle principal =
      IdealHandle::from_generators(A.ring(), std::move(gens_g), "principal");
  IdealHandle meet = intersect(A, principal, limits);

  std::vector<Polynomial> quotients;
  quotients.reserve(meet.generators().size());
  for (const Polynomial& h : meet.generators()) {
    std::optional<Polynomial> q = divide_exact(h, g);
    if (!q.has_value()) {
      // Every member of A ∩ (g) is a multiple of g; failing to divide would
      // mean the intersection itself is wrong.
      throw Error("internal: non-multiple of g in A ∩ (g)");
    }
    if (!q->is_zero()) quotients.push_back(std::move(*q));
  }
  return IdealHandle::from_generators(A.ring(), std::move(quotients),
                                      std::move(provenance));
}

IdealHandle quotient(const IdealHandle& A, const IdealHandle& B,
                     const ResourceLimits& limits) {
  require_same_ring(A.ring(), B.ring());
  if (B.is_zero_ideal()) throw DomainError("colon by the zero ideal");
  std::string provenance =
      "colon(" + A.provenance() + ", " + B.provenance() + ")";
  std::optional<IdealHandle> acc;
  for (const Polynomial& g : B.generators()) {
    IdealHandle part = quotient_by_poly(A, g, limits);
    acc = acc.has_value() ? intersect(*acc, part, limits) : part;
  }
  IdealHandle out = std::move(*acc);
  return IdealHandle::from_generators(out.ring(), out.generators(),
                                      std::move(provenance));
}

IdealHandle eliminate(const IdealHandle& A, const std::vector<std::size_t>& vars,
                      const ResourceLimits& limits) {
  std::string provenance = "eliminate(" + A.provenance() + ")";
  if (vars.empty()) {
    return IdealHandle::from_generators(A.ring(), A.generators(),
                                        std::move(provenance));
  }
  if (A.is_zero_ideal()) {
    return IdealHandle::from_generators(A.ring(), {}, std::move(provenance));
  }

  RingPtr elim_ring = A.ring()->with_order(A.ring()->order().eliminating(vars));
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size());
  for (const Polynomial& g : A.generators()) gens.push_back(g.in_ring(elim_ring));

  std::vector<bool> eliminated(A.ring()->var_count(), false);
  for (std::size_t v : vars) eliminated[v] = true;

  ReducedGB gb = buchberger(gens, limits);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.members()) {
    bool involves = false;
    for (const Term& t : g.terms()) {
      for (std::size_t v = 0; v < eliminated.size() && !involves; ++v) {
        if (eliminated[v] && t.monomial.exponent(v) > 0) involves = true;
      }
      if (involves) break;
    }
    if (!involves) kept.push_back(g.in_ring(A.ring()));
  }
  return IdealHandle::from_generators(A.ring(), std::move(kept),
                                      std::move(provenance));
}

IdealHandle saturate(const IdealHandle& A, const Polynomial& g,
                     const ResourceLimits& limits) {
  require_same_ring(A.ring(), g.ring());
  if (g.is_zero()) throw DomainError("saturation by the zero polynomial");
  std::string provenance =
      "saturate(" + A.provenance() + ", (" + g.to_string() + "))";

  IdealHandle current = A;
  for (int iteration = 0; iteration < 64; ++iteration) {
    IdealHandle next = quotient_by_poly(current, g, limits);
    if (ideal_equal(next, current, limits)) {
      return IdealHandle::from_generators(current.ring(), current.generators(),
                                          std::move(provenance));
    }
    current = std::move(next);
  }
  throw ResourceLimitError(ResourceLimitError::Limit::iterations,
                           "saturation did not stabilize within 64 colons");
}

bool ideal_equal(const IdealHandle& A, const IdealHandle& B,
                 const ResourceLimits& limits) {
  require_same_ring(A.ring(), B.ring());
  return A.groebner_basis(limits) == B.groebner_basis(limits);
}

bool ideal_membership(const Polynomial& p, const IdealHandle& A,
                      const ResourceLimits& limits) {
  return ideal_membership(p, A.groebner_basis(limits));
}

int height_via_initial(const IdealHandle& A, const ResourceLimits& limits) {
  const ReducedGB& gb = A.groebner_basis(limits);
  std::size_t nvars = A.ring()->var_count();
  MonomialIdeal in = initial_ideal(gb);
  return static_cast<int>(nvars) - krull_dimension(in, nvars);
}

}  // namespace detgb
