#pragma once

#include "detgb/ideal.hpp"
#include "detgb/report.hpp"

namespace detgb {

// Rectangular submatrix of the generic m x n matrix: columns a..b, rows c..d
// (1-based, inclusive). Mirrors the paper-style notation where a column
// interval leaves the rows full and vice versa.
struct RegionSpec {
  std::uint32_t col_lo = 1, col_hi = 1;
  std::uint32_t row_lo = 1, row_hi = 1;

  static RegionSpec full(std::uint32_t m, std::uint32_t n) {
    return RegionSpec{1, n, 1, m};
  }
  static RegionSpec cols(std::uint32_t m, std::uint32_t a, std::uint32_t b) {
    return RegionSpec{a, b, 1, m};
  }
  static RegionSpec rows(std::uint32_t n, std::uint32_t c, std::uint32_t d) {
    return RegionSpec{1, n, c, d};
  }

  std::uint32_t row_count() const noexcept { return row_hi - row_lo + 1; }
  std::uint32_t col_count() const noexcept { return col_hi - col_lo + 1; }

  void validate(std::uint32_t m, std::uint32_t n) const;
  bool is_full(std::uint32_t m, std::uint32_t n) const {
    return col_lo == 1 && col_hi == n && row_lo == 1 && row_hi == m;
  }

  // DSL notation: "X", "X[cols=a..b]", "X[rows=c..d]", "X[rows=.., cols=..]".
  std::string to_string(std::uint32_t m, std::uint32_t n) const;

  bool operator==(const RegionSpec&) const = default;
};

// The ideal of t-minors of a region.
struct MinorsIdealSpec {
  std::uint32_t t = 1;
  RegionSpec region;

  void validate(std::uint32_t m, std::uint32_t n) const;
  std::string to_string(std::uint32_t m, std::uint32_t n) const;

  bool operator==(const MinorsIdealSpec&) const = default;
};

// Exact determinant of the square submatrix on the given strictly increasing
// 1-based index lists, by cofactor expansion.
Polynomial minor(const RingPtr& ring, std::span<const std::uint32_t> rows,
                 std::span<const std::uint32_t> cols);

// All t-minors of the region, enumerated row-set-lexicographically then
// column-set-lexicographically. t = 0 yields the unit ideal.
IdealHandle minors_ideal(const RingPtr& ring, const MinorsIdealSpec& spec);

struct KnutsonPolynomial {
  Polynomial f;
  std::vector<Polynomial> factors;  // corner minors then sliding maximal minors
};

// The product of the lower-left corner minors, the upper-right corner
// minors, and the sliding maximal minors; its leading term under a diagonal
// order is the squarefree product of all m*n variables. Requires 2 <= m < n.
KnutsonPolynomial knutson_f(const RingPtr& ring);

// The complete-intersection ideal H inside I_t(X_{[i,t+i-1]}), generated by
// m-t+1 factors of f. Which factors depends on where i falls.
IdealHandle lemma_H(const RingPtr& ring, std::uint32_t t, std::uint32_t i);

// True iff every minor of size <= tmax has its main-diagonal product as
// leading monomial (checked exhaustively).
bool is_diagonal_order(const TermOrder& order, std::uint32_t m, std::uint32_t n,
                       std::uint32_t tmax);

enum class Axis { cols, rows };

// Compares two ideals by reduced Groebner basis; a fail verdict carries the
// first basis member the sides disagree on.
Report check_ideal_equality(const IdealHandle& lhs, const IdealHandle& rhs,
                            const ResourceLimits& limits = {});

// Verifies the decomposition step
//   I_t(R_[a,b-1]) + I_t(R_[a+1,b]) = I_t(R_[a,b]) ∩ I_{t-1}(R_[a+1,b-1])
// over column intervals (axis = cols) or row intervals (axis = rows).
Report check_decomposition(const RingPtr& ring, std::uint32_t t, std::uint32_t a,
                           std::uint32_t b, Axis axis = Axis::cols,
                           const ResourceLimits& limits = {});

// Verifies that each region's minors form a Groebner basis and that their
// union is one for the sum. Requires a diagonal order.
Report check_union_gb(const RingPtr& ring, std::span<const MinorsIdealSpec> specs,
                      const ResourceLimits& limits = {});

}  // namespace detgb
