#pragma once

#include <optional>

#include "detgb/determinantal.hpp"

namespace detgb {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Construction tree for the ideal-expression DSL:
//   expr    := term { "+" term }
//   term    := factor { "&" factor }
//   factor  := minors | colon | "(" expr ")"
//   minors  := "I" "(" int "," region ")"
//   colon   := "colon" "(" expr "," expr ")"
//   region  := "X" [ "[" (rows|cols) "=" int ".." int { "," ... } "]" ]
// Sum and Intersect nodes are n-ary and flattened, so structural equality
// identifies associativity-equivalent parses. Principal nodes carry a
// polynomial directly; they are built programmatically, not by the grammar.
class IdealExpr {
 public:
  enum class Kind { minors, principal, sum, intersect, colon };

  static IdealExpr minors(MinorsIdealSpec spec, SourceSpan span = {});
  static IdealExpr principal(Polynomial poly, SourceSpan span = {});
  static IdealExpr sum_of(std::vector<IdealExpr> children, SourceSpan span = {});
  static IdealExpr intersect_of(std::vector<IdealExpr> children,
                                SourceSpan span = {});
  static IdealExpr colon_of(IdealExpr numerator, IdealExpr denominator,
                            SourceSpan span = {});

  Kind kind() const noexcept { return kind_; }
  SourceSpan span() const noexcept { return span_; }
  const MinorsIdealSpec& minors_spec() const;
  const Polynomial& principal_poly() const;
  const std::vector<IdealExpr>& children() const noexcept { return children_; }

  // Canonical concrete syntax; parses back to an equal tree (principal
  // nodes excepted, they have no surface syntax).
  std::string print(std::uint32_t m, std::uint32_t n) const;

  // Structural equality, ignoring source spans.
  bool operator==(const IdealExpr& other) const;
  bool operator!=(const IdealExpr& other) const { return !(*this == other); }

 private:
  IdealExpr() = default;

  Kind kind_ = Kind::minors;
  SourceSpan span_;
  MinorsIdealSpec spec_;
  std::optional<Polynomial> poly_;
  std::vector<IdealExpr> children_;
};

// Parses and bounds-checks against the declared matrix size. Throws
// ParseError carrying a diagnostic code, line, column and offset.
IdealExpr parse_ideal_expr(std::string_view text, std::uint32_t m,
                           std::uint32_t n);

// Builds the ideal recursively through minors_ideal / sum / intersect /
// quotient; provenance is the canonical printed expression.
IdealHandle evaluate(const IdealExpr& ast, const RingPtr& ctx,
                     const ResourceLimits& limits = {});

// True iff the tree is a sum of minors leaves (the union-corollary shape).
bool is_pure_minors_sum(const IdealExpr& ast);

// The minors leaves of a pure sum, left to right.
std::vector<MinorsIdealSpec> minors_summands(const IdealExpr& ast);

}  // namespace detgb
