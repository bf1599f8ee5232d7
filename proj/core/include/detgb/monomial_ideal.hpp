#pragma once

#include <span>
#include <vector>

#include "detgb/monomial.hpp"

namespace detgb {

// Monomial ideal kept as its unique minimal generating set (an antichain
// under divisibility), sorted by exponent sequence for determinism.
class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(std::size_t var_count,
                                       std::vector<Monomial> gens);

  std::size_t var_count() const noexcept { return var_count_; }
  const std::vector<Monomial>& min_gens() const noexcept { return gens_; }

  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_unit_ideal() const noexcept {
    return gens_.size() == 1 && gens_[0].is_one();
  }
  bool contains(const Monomial& m) const;

 private:
  MonomialIdeal(std::size_t var_count, std::vector<Monomial> gens)
      : var_count_(var_count), gens_(std::move(gens)) {}

  std::size_t var_count_;
  std::vector<Monomial> gens_;
};

// Variable supports of the minimal generators of the radical: the
// combinatorial shadow a squarefree monomial ideal casts.
struct SupportComplex {
  std::size_t var_count = 0;
  std::vector<std::uint64_t> supports;  // antichain of bitmasks
};

SupportComplex support_complex(const MonomialIdeal& M);

// True iff every minimal generator has all exponents <= 1.
bool is_squarefree(const MonomialIdeal& M);

// True iff the supports are pairwise disjoint.
bool pairwise_coprime(std::span<const Monomial> monomials);

// Krull dimension of S/M in a ring with `var_count` variables: the largest
// variable subset meeting no generator support. Returns -1 for the unit
// ideal (the zero ring). Non-squarefree input is radicalized first, which
// changes neither the variety nor the dimension.
int krull_dimension(const MonomialIdeal& M, std::size_t var_count);

// Smallest number of variables meeting every support (exact branch and
// bound with memoization).
int min_transversal(const SupportComplex& complex);

}  // namespace detgb
