#include "detgb/ring.hpp"

namespace detgb {

std::size_t RingContext::var_index(std::uint32_t i, std::uint32_t j) const {
  if (i < 1 || i > m_ || j < 1 || j > n_) {
    throw DomainError("variable x[" + std::to_string(i) + "," +
                      std::to_string(j) + "] out of range for " + description());
  }
  return std::size_t{i - 1} * n_ + (j - 1);
}

std::size_t RingContext::aux_index() const {
  if (!has_aux_) throw DomainError("ring has no auxiliary variable");
  return grid_var_count();
}

std::string RingContext::var_name(std::size_t var) const {
  if (has_aux_ && var == grid_var_count()) return "u";
  if (var >= grid_var_count()) throw DomainError("variable index out of range");
  std::uint32_t i = static_cast<std::uint32_t>(var / n_) + 1;
  std::uint32_t j = static_cast<std::uint32_t>(var % n_) + 1;
  return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

bool RingContext::compatible_with(const RingContext& other) const {
  return m_ == other.m_ && n_ == other.n_ && field_ == other.field_ &&
         order_ == other.order_ && has_aux_ == other.has_aux_;
}

RingPtr RingContext::extended() const {
  if (has_aux_) throw DomainError("ring already has an auxiliary variable");
  return RingPtr(new RingContext(m_, n_, field_, order_.with_top_variable(),
                                 /*has_aux=*/true));
}

RingPtr RingContext::with_order(TermOrder order) const {
  if (order.var_count() != var_count()) {
    throw DomainError("order does not cover the ring variables");
  }
  return RingPtr(new RingContext(m_, n_, field_, std::move(order), has_aux_));
}

std::string RingContext::description() const {
  return field_.description() + "[" + std::to_string(m_) + "x" +
         std::to_string(n_) + (has_aux_ ? "+u" : "") + "]";
}

RingPtr make_ring(std::uint32_t m, std::uint32_t n, Field field,
                  TermOrder order) {
  if (m == 0 || n == 0) throw DomainError("matrix dimensions must be positive");
  if (order.var_count() != std::size_t{m} * n) {
    throw DomainError("term order ranks " + std::to_string(order.var_count()) +
                      " variables, ring has " + std::to_string(m * n));
  }
  return RingPtr(
      new RingContext(m, n, std::move(field), std::move(order), false));
}

RingPtr make_ring(std::uint32_t m, std::uint32_t n) {
  return make_ring(m, n, Field::rationals(), TermOrder::row_major_lex(m, n));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == nullptr || b == nullptr) throw DomainError("null ring context");
  if (a.get() == b.get()) return;
  if (!a->compatible_with(*b)) {
    throw ContextMismatchError("operands live in different rings: " +
                               a->description() + " vs " + b->description());
  }
}

}  // namespace detgb
