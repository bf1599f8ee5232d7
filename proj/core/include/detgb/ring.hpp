#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "detgb/field.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// The polynomial ring S = K[x[i,j] | 1 <= i <= m, 1 <= j <= n], optionally
// extended by one auxiliary elimination variable "u" ranked above everything.
// Contexts are immutable; all polynomials are created through one.
class RingContext {
 public:
  std::uint32_t rows() const noexcept { return m_; }
  std::uint32_t cols() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const TermOrder& order() const noexcept { return order_; }
  bool has_aux() const noexcept { return has_aux_; }

  // Number of variables including the auxiliary one when active.
  std::size_t var_count() const noexcept {
    return std::size_t{m_} * n_ + (has_aux_ ? 1 : 0);
  }
  std::size_t grid_var_count() const noexcept { return std::size_t{m_} * n_; }

  // 1-based matrix coordinates.
  std::size_t var_index(std::uint32_t i, std::uint32_t j) const;
  std::size_t aux_index() const;
  std::string var_name(std::size_t var) const;

  // Same ring in the structural sense: polynomials interoperate.
  bool compatible_with(const RingContext& other) const;

  // This ring plus the auxiliary variable under a block-elimination order.
  RingPtr extended() const;

  // Same variables, different term order (used by eliminate()).
  RingPtr with_order(TermOrder order) const;

  std::string description() const;

  friend RingPtr make_ring(std::uint32_t m, std::uint32_t n, Field field,
                           TermOrder order);

 private:
  RingContext(std::uint32_t m, std::uint32_t n, Field field, TermOrder order,
              bool has_aux)
      : m_(m), n_(n), field_(std::move(field)), order_(std::move(order)),
        has_aux_(has_aux) {}

  std::uint32_t m_;
  std::uint32_t n_;
  Field field_;
  TermOrder order_;
  bool has_aux_;
};

// Builds the ring context. Throws DomainError on zero dimensions, a non-prime
// characteristic, or an order whose ranking does not cover the m*n variables.
RingPtr make_ring(std::uint32_t m, std::uint32_t n, Field field,
                  TermOrder order);

// Convenience: lex row-major over Q.
RingPtr make_ring(std::uint32_t m, std::uint32_t n);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace detgb
