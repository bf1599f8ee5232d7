#include "detgb/monomial.hpp"

#include <numeric>

namespace detgb {

Monomial Monomial::from_exponents(std::vector<std::uint32_t> exps) {
  Monomial m(exps.size());
  m.degree_ = std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
  m.exps_ = std::move(exps);
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw ContextMismatchError("monomials from different rings");
  }
  Monomial out(exps_.size());
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    out.exps_[v] = exps_[v] + other.exps_[v];
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::times_var(std::size_t var, std::uint32_t e) const {
  Monomial out = *this;
  out.exps_[var] += e;
  out.degree_ += e;
  return out;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial out(exps_.size());
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] = exps_[v] * e;
  out.degree_ = degree_ * e;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw ContextMismatchError("monomials from different rings");
  }
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) {
    throw DomainError("monomial division is not exact");
  }
  Monomial out(exps_.size());
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    out.exps_[v] = exps_[v] - other.exps_[v];
  }
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) {
    throw ContextMismatchError("monomials from different rings");
  }
  Monomial out(a.exps_.size());
  std::uint64_t deg = 0;
  for (std::size_t v = 0; v < a.exps_.size(); ++v) {
    out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
    deg += out.exps_[v];
  }
  out.degree_ = deg;
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) {
    throw ContextMismatchError("monomials from different rings");
  }
  Monomial out(a.exps_.size());
  std::uint64_t deg = 0;
  for (std::size_t v = 0; v < a.exps_.size(); ++v) {
    out.exps_[v] = std::min(a.exps_[v], b.exps_[v]);
    deg += out.exps_[v];
  }
  out.degree_ = deg;
  return out;
}

bool Monomial::is_coprime_with(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    throw ContextMismatchError("monomials from different rings");
  }
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > 0 && other.exps_[v] > 0) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  for (std::uint32_t e : exps_) {
    if (e > 1) return false;
  }
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > 0) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

}  // namespace detgb
