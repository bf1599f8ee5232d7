#include "detgb/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace detgb {

Polynomial Polynomial::constant(RingPtr ring, Scalar value) {
  bool zero = ring->field().is_zero(value);
  std::size_t nvars = ring->var_count();
  Polynomial p(std::move(ring));
  if (!zero) p.terms_.push_back({Monomial(nvars), std::move(value)});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long long value) {
  Scalar c = ring->field().from_int(value);
  return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->var_count()) throw DomainError("variable index out of range");
  Monomial m = Monomial(ring->var_count()).times_var(var);
  Scalar one = ring->field().one();
  return term(std::move(ring), std::move(m), std::move(one));
}

Polynomial Polynomial::term(RingPtr ring, Monomial monomial, Scalar coeff) {
  if (monomial.var_count() != ring->var_count()) {
    throw ContextMismatchError("monomial does not match ring");
  }
  bool zero = ring->field().is_zero(coeff);
  Polynomial p(std::move(ring));
  if (!zero) p.terms_.push_back({std::move(monomial), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const TermOrder& order = ring->order();
  const Field& field = ring->field();
  for (const Term& t : terms) {
    if (t.monomial.var_count() != ring->var_count()) {
      throw ContextMismatchError("monomial does not match ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  Polynomial p(std::move(ring));
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!field.is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  assert(p.well_formed());
  return p;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  const TermOrder& order = ring_->order();
  const Field& field = ring_->field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    auto cmp = order.compare(terms_[i].monomial, other.terms_[j].monomial);
    if (cmp == std::strong_ordering::greater) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Scalar c = field.add(terms_[i].coeff, other.terms_[j].coeff);
      if (!field.is_zero(c)) {
        out.terms_.push_back({terms_[i].monomial, std::move(c)});
      }
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  assert(out.well_formed());
  return out;
}

Polynomial Polynomial::operator-() const {
  const Field& field = ring_->field();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.terms_.push_back({t.monomial, field.neg(t.coeff)});
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::times_term(const Monomial& monomial,
                                  const Scalar& coeff) const {
  const Field& field = ring_->field();
  Polynomial out(ring_);
  if (field.is_zero(coeff)) return out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    // Multiplying every monomial by a fixed one preserves the term order.
    out.terms_.push_back({t.monomial.times(monomial), field.mul(t.coeff, coeff)});
  }
  assert(out.well_formed());
  return out;
}

Polynomial Polynomial::times_scalar(const Scalar& coeff) const {
  return times_term(Monomial(ring_->var_count()), coeff);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  const Field& field = ring_->field();
  std::vector<Term> cross;
  cross.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      cross.push_back({a.monomial.times(b.monomial), field.mul(a.coeff, b.coeff)});
    }
  }
  return from_terms(ring_, std::move(cross));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const Field& field = ring_->field();
  if (field.is_one(leading_coeff())) return *this;
  return times_scalar(field.inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = from_int(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  if (terms_.size() != other.terms_.size()) return false;
  const Field& field = ring_->field();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (terms_[k].monomial != other.terms_[k].monomial) return false;
    if (!field.equal(terms_[k].coeff, other.terms_[k].coeff)) return false;
  }
  return true;
}

bool Polynomial::well_formed() const {
  const Field& field = ring_->field();
  const TermOrder& order = ring_->order();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (field.is_zero(terms_[k].coeff)) return false;
    if (k > 0 && order.compare(terms_[k - 1].monomial, terms_[k].monomial) !=
                     std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->var_count() != ring_->var_count() ||
      other->field() != ring_->field()) {
    throw ContextMismatchError("rings are not structurally identical");
  }
  std::vector<Term> ts = terms_;
  return from_terms(std::move(other), std::move(ts));
}

Polynomial Polynomial::lifted_to(RingPtr extended) const {
  if (!extended->has_aux() || extended->grid_var_count() != ring_->var_count() ||
      extended->field() != ring_->field()) {
    throw ContextMismatchError("not an extension of this ring");
  }
  Polynomial out(std::move(extended));
  // Appending a zero aux exponent changes no comparison under the block
  // order, so the term sequence stays sorted.
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    exps.push_back(0);
    out.terms_.push_back({Monomial::from_exponents(std::move(exps)), t.coeff});
  }
  return out;
}

Polynomial Polynomial::projected_to(RingPtr base) const {
  if (!ring_->has_aux() || base->var_count() != ring_->grid_var_count() ||
      base->field() != ring_->field()) {
    throw ContextMismatchError("not a projection onto the base ring");
  }
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    if (exps.back() != 0) {
      throw DomainError("polynomial involves the auxiliary variable");
    }
    exps.pop_back();
    ts.push_back({Monomial::from_exponents(std::move(exps)), t.coeff});
  }
  return from_terms(std::move(base), std::move(ts));
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

namespace {

// Minimal scanner for the textual polynomial format.
struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw DomainError(std::string("expected '") + c + "' in polynomial at offset " +
                        std::to_string(pos));
    }
  }
  std::uint64_t integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
      throw DomainError("expected integer in polynomial at offset " +
                        std::to_string(pos));
    }
    return std::stoull(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  PolyLexer lx{text};
  const Field& field = ring->field();
  std::vector<Term> terms;

  bool first = true;
  while (!lx.eof()) {
    bool negative = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negative = true;
    } else if (!first) {
      throw DomainError("expected '+' or '-' in polynomial at offset " +
                        std::to_string(lx.pos));
    }
    first = false;

    Scalar coeff = field.one();
    bool have_coeff = false;
    Monomial mono(ring->var_count());

    // coefficient: integer or integer/integer
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::uint64_t num = lx.integer();
      std::string lit = std::to_string(num);
      if (lx.accept('/')) {
        lit += "/" + std::to_string(lx.integer());
      }
      coeff = field.parse(lit);
      have_coeff = true;
      if (!lx.accept('*')) {
        if (negative) coeff = field.neg(coeff);
        terms.push_back({std::move(mono), std::move(coeff)});
        continue;
      }
    }

    // variable factors joined by '*'
    bool have_var = false;
    while (true) {
      char c = lx.peek();
      std::size_t var = 0;
      if (c == 'x') {
        ++lx.pos;
        lx.expect('[');
        std::uint32_t i = static_cast<std::uint32_t>(lx.integer());
        lx.expect(',');
        std::uint32_t j = static_cast<std::uint32_t>(lx.integer());
        lx.expect(']');
        var = ring->var_index(i, j);
      } else if (c == 'u' && ring->has_aux()) {
        ++lx.pos;
        var = ring->aux_index();
      } else {
        break;
      }
      std::uint32_t e = 1;
      if (lx.accept('^')) e = static_cast<std::uint32_t>(lx.integer());
      mono = mono.times_var(var, e);
      have_var = true;
      if (!lx.accept('*')) break;
    }

    if (!have_coeff && !have_var) {
      throw DomainError("expected term in polynomial at offset " +
                        std::to_string(lx.pos));
    }
    if (negative) coeff = field.neg(coeff);
    terms.push_back({std::move(mono), std::move(coeff)});
  }

  return from_terms(std::move(ring), std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& field = ring_->field();
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    std::string coeff_str = field.to_string(t.coeff);
    bool negative = !coeff_str.empty() && coeff_str[0] == '-';
    std::string mag = negative ? coeff_str.substr(1) : coeff_str;

    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }

    std::string mono_str;
    for (std::size_t v = 0; v < t.monomial.var_count(); ++v) {
      std::uint32_t e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (!mono_str.empty()) mono_str += "*";
      mono_str += ring_->var_name(v);
      if (e > 1) mono_str += "^" + std::to_string(e);
    }

    if (mono_str.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono_str;
    } else {
      out += mag;
      out += "*";
      out += mono_str;
    }
  }
  return out;
}

}  // namespace detgb
