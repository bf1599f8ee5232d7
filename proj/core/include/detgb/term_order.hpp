#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "detgb/monomial.hpp"

namespace detgb {

// Comparison rule on monomials: lex, degrevlex, or a two-block elimination
// order, all parameterized by a variable ranking (rank 0 compares first).
// Every instance is a genuine term order: total, multiplicative, 1 minimal.
class TermOrder {
 public:
  enum class Kind { lex, degrevlex, block };

  // rank_of_var[v] = position of variable v in the ranking (0 = highest).
  static TermOrder lex(std::vector<std::uint32_t> rank_of_var);
  static TermOrder degrevlex(std::vector<std::uint32_t> rank_of_var);

  // Two-block order: the `split` top-ranked variables are compared first
  // under `outer`, then the rest under `inner`. Monomials involving a
  // first-block variable beat all monomials that do not.
  static TermOrder block(std::vector<std::uint32_t> rank_of_var,
                         std::uint32_t split, Kind outer, Kind inner);

  // Row-major ranking x[1,1] > x[1,2] > ... > x[m,n].
  static TermOrder row_major_lex(std::uint32_t m, std::uint32_t n);
  static TermOrder row_major_degrevlex(std::uint32_t m, std::uint32_t n);

  Kind kind() const noexcept { return kind_; }
  std::size_t var_count() const noexcept { return rank_of_var_.size(); }
  const std::vector<std::uint32_t>& rank_of_var() const noexcept {
    return rank_of_var_;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  // Extends this order (which must not itself be a block order) with one new
  // variable at the end of the index space, ranked above everything: the
  // block-elimination order used for intersections.
  TermOrder with_top_variable() const;

  // Block order over the same variables ranking `vars` (indices) first;
  // used by eliminate(). Relative ranks within each part are preserved.
  TermOrder eliminating(const std::vector<std::size_t>& vars) const;

  // Stable identifier for caches and reports, e.g. "lex[0,1,2]".
  std::string signature() const;

  bool operator==(const TermOrder& other) const;
  bool operator!=(const TermOrder& other) const { return !(*this == other); }

 private:
  TermOrder(Kind kind, std::vector<std::uint32_t> rank_of_var,
            std::uint32_t split, Kind outer, Kind inner);

  void build_vars_by_rank();

  std::strong_ordering compare_range(const Monomial& a, const Monomial& b,
                                     Kind kind, std::size_t rank_begin,
                                     std::size_t rank_end) const;

  Kind kind_;
  std::vector<std::uint32_t> rank_of_var_;
  std::vector<std::uint32_t> vars_by_rank_;
  std::uint32_t split_ = 0;
  Kind outer_ = Kind::lex;
  Kind inner_ = Kind::lex;
};

}  // namespace detgb
