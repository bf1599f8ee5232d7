#pragma once

#include <cstdint>
#include <vector>

#include "detgb/errors.hpp"

namespace detgb {

// Dense exponent sequence over the ring variables, with the total degree
// cached. Variable indexing is row-major: x[i,j] sits at (i-1)*n + (j-1);
// the auxiliary elimination variable, when active, occupies the last slot.
class Monomial {
 public:
  explicit Monomial(std::size_t var_count)
      : exps_(var_count, 0), degree_(0) {}

  static Monomial from_exponents(std::vector<std::uint32_t> exps);

  std::size_t var_count() const noexcept { return exps_.size(); }
  std::uint32_t exponent(std::size_t var) const { return exps_[var]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial times(const Monomial& other) const;
  Monomial times_var(std::size_t var, std::uint32_t e = 1) const;
  Monomial pow(std::uint32_t e) const;

  bool divides(const Monomial& other) const;
  // Requires this->divides(other) == false check by caller; throws otherwise.
  Monomial divided_by(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool is_coprime_with(const Monomial& other) const;
  bool is_squarefree() const;

  // Bitmask of variables with nonzero exponent. Requires var_count <= 64,
  // which holds for every desk-scale ring (m*n + 1 <= 37).
  std::uint64_t support_mask() const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_;
};

}  // namespace detgb
