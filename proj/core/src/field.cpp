#include "detgb/field.hpp"

#include <charconv>

namespace detgb {

namespace {

const mpq_class& as_rat(const Scalar& a) {
  const mpq_class* q = std::get_if<mpq_class>(&a);
  if (q == nullptr) throw DomainError("scalar is not a rational");
  return *q;
}

std::uint32_t as_res(const Scalar& a) {
  const std::uint32_t* r = std::get_if<std::uint32_t>(&a);
  if (r == nullptr) throw DomainError("scalar is not a prime-field residue");
  return *r;
}

// Inverse of a mod p via extended Euclid; requires 0 < a < p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("residue not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

}  // namespace

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p > (1u << 31)) throw DomainError("characteristic exceeds 2^31");
  if (!is_prime_u32(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::prime, p);
}

std::uint32_t Field::reduce(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

Scalar Field::zero() const {
  if (kind_ == Kind::rationals) return mpq_class(0);
  return std::uint32_t{0};
}

Scalar Field::one() const {
  if (kind_ == Kind::rationals) return mpq_class(1);
  return reduce(1);
}

Scalar Field::from_int(long long value) const {
  if (kind_ == Kind::rationals) {
    mpq_class q;
    q = static_cast<long>(value);
    return q;
  }
  return reduce(value);
}

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == Kind::rationals) return sgn(as_rat(a)) == 0;
  return as_res(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == Kind::rationals) return as_rat(a) == 1;
  return as_res(a) == reduce(1);
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return as_rat(a) == as_rat(b);
  return as_res(a) == as_res(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return canonical(as_rat(a) + as_rat(b));
  std::uint64_t s = std::uint64_t{as_res(a)} + as_res(b);
  if (s >= p_) s -= p_;
  return static_cast<std::uint32_t>(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return canonical(as_rat(a) - as_rat(b));
  std::uint64_t s = std::uint64_t{as_res(a)} + p_ - as_res(b);
  if (s >= p_) s -= p_;
  return static_cast<std::uint32_t>(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return canonical(as_rat(a) * as_rat(b));
  return static_cast<std::uint32_t>((std::uint64_t{as_res(a)} * as_res(b)) % p_);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::rationals) return canonical(-as_rat(a));
  std::uint32_t r = as_res(a);
  return r == 0 ? r : p_ - r;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  if (kind_ == Kind::rationals) return canonical(1 / as_rat(a));
  return mod_inverse(as_res(a), p_);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  Scalar acc = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::rationals) {
    const mpq_class& q = as_rat(a);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(as_res(a));
}

Scalar Field::parse(std::string_view text) const {
  if (text.empty()) throw DomainError("empty scalar literal");
  std::string s(text);
  if (kind_ == Kind::rationals) {
    try {
      mpq_class q(s);
      q.canonicalize();
      if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
      return q;
    } catch (const std::invalid_argument&) {
      throw DomainError("bad rational literal '" + s + "'");
    }
  }
  std::size_t pos = s.find('/');
  if (pos != std::string::npos) {
    Scalar num = parse(s.substr(0, pos));
    Scalar den = parse(s.substr(pos + 1));
    return div(num, den);
  }
  try {
    mpz_class z(s);
    mpz_class r = z % p_;
    long v = r.get_si();
    return reduce(v);
  } catch (const std::invalid_argument&) {
    throw DomainError("bad residue literal '" + s + "'");
  }
}

std::string Field::description() const {
  if (kind_ == Kind::rationals) return "Q";
  return "Fp:" + std::to_string(p_);
}

Field Field::parse_description(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint32_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw DomainError("bad field descriptor '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw DomainError("bad field descriptor '" + std::string(text) +
                    "' (expected Q or Fp:<p>)");
}

}  // namespace detgb
