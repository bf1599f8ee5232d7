#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "detgb/errors.hpp"

namespace detgb {

// A coefficient: exact rational (canonical, positive denominator) or a
// prime-field residue in [0, p). Which alternative is active is dictated by
// the Field of the ambient ring; mixing them is a logic error.
using Scalar = std::variant<mpq_class, std::uint32_t>;

// Coefficient field descriptor plus its arithmetic. All operations are exact;
// no floating point anywhere.
class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }

  // p must be prime and <= 2^31.
  static Field prime(std::uint32_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::prime; }

  // 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws DomainError on zero
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  // Rationals print as "a" or "a/b"; prime-field elements as the least
  // nonnegative residue.
  std::string to_string(const Scalar& a) const;

  // Accepts an optionally signed integer or "a/b"; residues are reduced mod p.
  Scalar parse(std::string_view text) const;

  bool operator==(const Field& other) const noexcept {
    return kind_ == other.kind_ && p_ == other.p_;
  }
  bool operator!=(const Field& other) const noexcept { return !(*this == other); }

  std::string description() const;  // "Q" or "Fp:<p>"
  static Field parse_description(std::string_view text);

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  std::uint32_t reduce(long long value) const;

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t p);

}  // namespace detgb
