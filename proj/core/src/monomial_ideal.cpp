#include "detgb/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace detgb {

MonomialIdeal MonomialIdeal::from_generators(std::size_t var_count,
                                             std::vector<Monomial> gens) {
  for (const Monomial& g : gens) {
    if (g.var_count() != var_count) {
      throw ContextMismatchError("generator does not match variable count");
    }
  }
  // Minimalize: keep only divisibility-minimal generators.
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j].divides(gens[i]) && gens[i] != gens[j]) redundant = true;
      if (gens[i] == gens[j] && j < i) redundant = true;  // keep one copy
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.exponents() < b.exponents();
            });
  return MonomialIdeal(var_count, std::move(kept));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_) {
    if (g.divides(m)) return true;
  }
  return false;
}

bool is_squarefree(const MonomialIdeal& M) {
  for (const Monomial& g : M.min_gens()) {
    if (!g.is_squarefree()) return false;
  }
  return true;
}

bool pairwise_coprime(std::span<const Monomial> monomials) {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = i + 1; j < monomials.size(); ++j) {
      if (!monomials[i].is_coprime_with(monomials[j])) return false;
    }
  }
  return true;
}

SupportComplex support_complex(const MonomialIdeal& M) {
  if (M.var_count() > 64) throw DomainError("support masks limited to 64 variables");
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : M.min_gens()) supports.push_back(g.support_mask());
  // Radicalization can create comparable supports; re-minimalize.
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  std::vector<std::uint64_t> antichain;
  for (std::uint64_t s : supports) {
    bool redundant = false;
    for (std::uint64_t t : supports) {
      if (t != s && (t & s) == t) {
        redundant = true;
        break;
      }
    }
    if (!redundant) antichain.push_back(s);
  }
  return SupportComplex{M.var_count(), std::move(antichain)};
}

namespace {

struct TransversalSearch {
  const std::vector<std::uint64_t>& supports;
  int best;
  std::unordered_map<std::uint64_t, int> memo;  // keyed by chosen-variable mask

  // A greedy packing of pairwise-disjoint uncovered supports lower-bounds the
  // remaining transversal size.
  int lower_bound(std::uint64_t chosen) const {
    int bound = 0;
    std::uint64_t used = 0;
    for (std::uint64_t s : supports) {
      if ((s & chosen) != 0) continue;
      if ((s & used) == 0) {
        ++bound;
        used |= s;
      }
    }
    return bound;
  }

  void search(std::uint64_t chosen, int depth) {
    if (depth >= best) return;
    auto it = memo.find(chosen);
    if (it != memo.end() && it->second <= depth) return;
    memo[chosen] = depth;

    const std::uint64_t* uncovered = nullptr;
    for (const std::uint64_t& s : supports) {
      if ((s & chosen) == 0) {
        uncovered = &s;
        break;
      }
    }
    if (uncovered == nullptr) {
      best = depth;
      return;
    }
    if (depth + lower_bound(chosen) >= best) return;
    std::uint64_t s = *uncovered;
    while (s != 0) {
      std::uint64_t v = s & (~s + 1);
      search(chosen | v, depth + 1);
      s ^= v;
    }
  }
};

}  // namespace

int min_transversal(const SupportComplex& complex) {
  for (std::uint64_t s : complex.supports) {
    if (s == 0) throw DomainError("unit ideal has no transversal");
  }
  if (complex.supports.empty()) return 0;
  TransversalSearch search{complex.supports,
                           static_cast<int>(complex.var_count) + 1,
                           {}};
  search.search(0, 0);
  return search.best;
}

int krull_dimension(const MonomialIdeal& M, std::size_t var_count) {
  if (M.var_count() != var_count) {
    throw ContextMismatchError("variable count mismatch");
  }
  if (M.is_unit_ideal()) return -1;
  if (M.is_zero_ideal()) return static_cast<int>(var_count);
  return static_cast<int>(var_count) - min_transversal(support_complex(M));
}

}  // namespace detgb
