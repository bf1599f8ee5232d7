#include "detgb/groebner.hpp"

#include <algorithm>
#include <list>

namespace detgb {

namespace {

struct Pair {
  std::size_t i, j;     // indices into the working basis, i < j
  Monomial lcm;
  std::uint64_t lcm_degree;
};

// Normal selection: smallest lcm degree first; ties broken by the order on
// the lcm, then by indices, so runs are deterministic.
struct PairQueueCmp {
  const TermOrder& order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    auto cmp = order.compare(a.lcm, b.lcm);
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const ResourceLimits& limits)
      : ring_(std::move(ring)), guard_(limits) {}

  ReducedGB run(std::span<const Polynomial> gens) {
    for (const Polynomial& g : gens) {
      if (!g.is_zero()) insert(g.monic());
    }

    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   PairQueueCmp{ring_->order()});
      Pair p = *best;
      pairs_.erase(best);
      guard_.charge_pair();
      ++stats_.pairs_reduced;

      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      Polynomial r = normal_form(s, basis_);
      if (!r.is_zero()) insert(r.monic());
    }

    return ReducedGB(ring_, reduce_final(), stats_);
  }

 private:
  void insert(Polynomial g) {
    std::size_t t = basis_.size();
    const Monomial& lm_t = g.leading_monomial();

    // Gebauer-Moeller update. Chain criterion on existing pairs first:
    // (i,j) is redundant once lm(t) divides lcm(i,j) strictly inside it.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& lcm_ij = it->lcm;
      if (lm_t.divides(lcm_ij) &&
          Monomial::lcm(basis_[it->i].leading_monomial(), lm_t) != lcm_ij &&
          Monomial::lcm(basis_[it->j].leading_monomial(), lm_t) != lcm_ij) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    // Candidate pairs (i, t), pruned among themselves.
    std::vector<Pair> fresh;
    fresh.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Monomial lcm = Monomial::lcm(basis_[i].leading_monomial(), lm_t);
      fresh.push_back(Pair{i, t, std::move(lcm), 0});
      fresh.back().lcm_degree = fresh.back().lcm.degree();
      ++stats_.pairs_generated;
    }
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[a].lcm != fresh[b].lcm) {
          drop[a] = true;
          break;
        }
      }
    }
    // Among equal lcms keep the first.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (!drop[b] && fresh[a].lcm == fresh[b].lcm) drop[b] = true;
      }
    }
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a]) continue;
      if (basis_[fresh[a].i].leading_monomial().is_coprime_with(lm_t)) {
        drop[a] = true;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!drop[a]) pairs_.push_back(std::move(fresh[a]));
    }

    basis_.push_back(std::move(g));
    stats_.max_basis_size = std::max<std::uint64_t>(stats_.max_basis_size,
                                                    basis_.size());
  }

  // Minimalize then tail-reduce; output sorted by leading monomial descending.
  std::vector<Polynomial> reduce_final() {
    const TermOrder& order = ring_->order();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& lm_j = basis_[j].leading_monomial();
        const Monomial& lm_i = basis_[i].leading_monomial();
        if (lm_j.divides(lm_i) && lm_i != lm_j) redundant = true;
        if (lm_i == lm_j && j < i) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }

    std::vector<Polynomial> minimal;
    minimal.reserve(keep.size());
    for (std::size_t i : keep) minimal.push_back(basis_[i]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return order.compare(a.leading_monomial(), b.leading_monomial()) ==
                       std::strong_ordering::greater;
              });

    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = normal_form(minimal[i], others);
      // Leading monomials are pairwise non-divisible, so reduction only
      // rewrites the tail and r stays nonzero with the same leading monomial.
      reduced.push_back(r.monic());
    }
    return reduced;
  }

  RingPtr ring_;
  ResourceGuard guard_;
  std::vector<Polynomial> basis_;
  std::list<Pair> pairs_;
  GBStats stats_;
};

}  // namespace

ReducedGB buchberger(std::span<const Polynomial> gens,
                     const ResourceLimits& limits) {
  if (gens.empty()) throw DomainError("buchberger requires at least one generator");
  RingPtr ring = gens.front().ring();
  for (const Polynomial& g : gens) require_same_ring(ring, g.ring());
  return Buchberger(ring, limits).run(gens);
}

std::pair<bool, GBCertificate> is_groebner(std::span<const Polynomial> gens,
                                           const ResourceLimits& limits) {
  if (gens.empty()) throw DomainError("is_groebner requires generators");
  RingPtr ring = gens.front().ring();
  for (const Polynomial& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) throw DomainError("is_groebner requires nonzero generators");
  }

  ResourceGuard guard(limits);
  GBCertificate cert;
  cert.is_basis = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      PairCheck check{static_cast<std::uint32_t>(i),
                      static_cast<std::uint32_t>(j), false,
                      Polynomial::zero(ring)};
      if (gens[i].leading_monomial().is_coprime_with(gens[j].leading_monomial())) {
        check.skipped_coprime = true;
        cert.checks.push_back(std::move(check));
        continue;
      }
      guard.charge_pair();
      check.remainder = normal_form(s_polynomial(gens[i], gens[j]), gens);
      bool failed = !check.remainder.is_zero();
      cert.checks.push_back(std::move(check));
      if (failed) {
        cert.is_basis = false;
        return {false, std::move(cert)};
      }
    }
  }
  return {true, std::move(cert)};
}

bool replay_certificate(std::span<const Polynomial> gens,
                        const GBCertificate& cert) {
  for (const PairCheck& check : cert.checks) {
    if (check.i >= gens.size() || check.j >= gens.size()) return false;
    const Polynomial& a = gens[check.i];
    const Polynomial& b = gens[check.j];
    if (check.skipped_coprime) {
      if (!a.leading_monomial().is_coprime_with(b.leading_monomial())) return false;
      continue;
    }
    Polynomial r = normal_form(s_polynomial(a, b), gens);
    if (r != check.remainder) return false;
  }
  return true;
}

bool ideal_membership(const Polynomial& p, const ReducedGB& gb) {
  require_same_ring(p.ring(), gb.ring());
  if (p.is_zero()) return true;
  if (gb.is_zero_ideal()) return false;
  return normal_form(p, gb.members()).is_zero();
}

MonomialIdeal initial_ideal(const ReducedGB& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.size());
  for (const Polynomial& g : gb.members()) lms.push_back(g.leading_monomial());
  return MonomialIdeal::from_generators(gb.ring()->var_count(), std::move(lms));
}

}  // namespace detgb
