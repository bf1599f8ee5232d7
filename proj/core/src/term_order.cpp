#include "detgb/term_order.hpp"

#include <algorithm>
#include <numeric>

namespace detgb {

namespace {

void check_permutation(const std::vector<std::uint32_t>& rank_of_var) {
  std::vector<bool> seen(rank_of_var.size(), false);
  for (std::uint32_t r : rank_of_var) {
    if (r >= rank_of_var.size() || seen[r]) {
      throw DomainError("variable ranking is not a permutation");
    }
    seen[r] = true;
  }
}

std::vector<std::uint32_t> identity_ranks(std::size_t n) {
  std::vector<std::uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0u);
  return ranks;
}

}  // namespace

TermOrder::TermOrder(Kind kind, std::vector<std::uint32_t> rank_of_var,
                     std::uint32_t split, Kind outer, Kind inner)
    : kind_(kind),
      rank_of_var_(std::move(rank_of_var)),
      split_(split),
      outer_(outer),
      inner_(inner) {
  check_permutation(rank_of_var_);
  build_vars_by_rank();
}

void TermOrder::build_vars_by_rank() {
  vars_by_rank_.assign(rank_of_var_.size(), 0);
  for (std::size_t v = 0; v < rank_of_var_.size(); ++v) {
    vars_by_rank_[rank_of_var_[v]] = static_cast<std::uint32_t>(v);
  }
}

TermOrder TermOrder::lex(std::vector<std::uint32_t> rank_of_var) {
  return TermOrder(Kind::lex, std::move(rank_of_var), 0, Kind::lex, Kind::lex);
}

TermOrder TermOrder::degrevlex(std::vector<std::uint32_t> rank_of_var) {
  return TermOrder(Kind::degrevlex, std::move(rank_of_var), 0, Kind::lex,
                   Kind::lex);
}

TermOrder TermOrder::block(std::vector<std::uint32_t> rank_of_var,
                           std::uint32_t split, Kind outer, Kind inner) {
  if (outer == Kind::block || inner == Kind::block) {
    throw DomainError("nested block orders are not supported");
  }
  if (split == 0 || split >= rank_of_var.size()) {
    throw DomainError("block split must leave both blocks nonempty");
  }
  return TermOrder(Kind::block, std::move(rank_of_var), split, outer, inner);
}

TermOrder TermOrder::row_major_lex(std::uint32_t m, std::uint32_t n) {
  return lex(identity_ranks(std::size_t{m} * n));
}

TermOrder TermOrder::row_major_degrevlex(std::uint32_t m, std::uint32_t n) {
  return degrevlex(identity_ranks(std::size_t{m} * n));
}

std::strong_ordering TermOrder::compare_range(const Monomial& a,
                                              const Monomial& b, Kind kind,
                                              std::size_t rank_begin,
                                              std::size_t rank_end) const {
  if (kind == Kind::degrevlex) {
    std::uint64_t deg_a = 0, deg_b = 0;
    for (std::size_t r = rank_begin; r < rank_end; ++r) {
      deg_a += a.exponent(vars_by_rank_[r]);
      deg_b += b.exponent(vars_by_rank_[r]);
    }
    if (deg_a != deg_b) {
      return deg_a < deg_b ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    // Equal degree: scan lowest-ranked variables first; the monomial with the
    // smaller exponent at the first difference is the larger one.
    for (std::size_t r = rank_end; r-- > rank_begin;) {
      std::uint32_t ea = a.exponent(vars_by_rank_[r]);
      std::uint32_t eb = b.exponent(vars_by_rank_[r]);
      if (ea != eb) {
        return ea < eb ? std::strong_ordering::greater
                       : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }
  // lex
  for (std::size_t r = rank_begin; r < rank_end; ++r) {
    std::uint32_t ea = a.exponent(vars_by_rank_[r]);
    std::uint32_t eb = b.exponent(vars_by_rank_[r]);
    if (ea != eb) {
      return ea > eb ? std::strong_ordering::greater
                     : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const Monomial& a,
                                        const Monomial& b) const {
  if (a.var_count() != rank_of_var_.size() ||
      b.var_count() != rank_of_var_.size()) {
    throw ContextMismatchError("monomial does not match order variable count");
  }
  switch (kind_) {
    case Kind::lex:
      return compare_range(a, b, Kind::lex, 0, rank_of_var_.size());
    case Kind::degrevlex:
      return compare_range(a, b, Kind::degrevlex, 0, rank_of_var_.size());
    case Kind::block: {
      auto first = compare_range(a, b, outer_, 0, split_);
      if (first != std::strong_ordering::equal) return first;
      return compare_range(a, b, inner_, split_, rank_of_var_.size());
    }
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::with_top_variable() const {
  if (kind_ == Kind::block) {
    throw DomainError("cannot extend a block order with a second block");
  }
  std::vector<std::uint32_t> ranks(rank_of_var_.size() + 1);
  for (std::size_t v = 0; v < rank_of_var_.size(); ++v) {
    ranks[v] = rank_of_var_[v] + 1;
  }
  ranks.back() = 0;
  return TermOrder(Kind::block, std::move(ranks), 1, Kind::lex, kind_);
}

TermOrder TermOrder::eliminating(const std::vector<std::size_t>& vars) const {
  std::vector<bool> eliminated(rank_of_var_.size(), false);
  for (std::size_t v : vars) {
    if (v >= rank_of_var_.size()) throw DomainError("variable index out of range");
    eliminated[v] = true;
  }
  std::uint32_t k = 0;
  for (bool e : eliminated) k += e ? 1 : 0;
  if (k == 0 || k == rank_of_var_.size()) {
    throw DomainError("elimination block must be a proper nonempty subset");
  }
  // Stable re-ranking: eliminated variables first, each part keeping the
  // relative order of the original ranking.
  std::vector<std::uint32_t> order(vars_by_rank_);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::uint32_t v) { return eliminated[v]; });
  std::vector<std::uint32_t> ranks(rank_of_var_.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
  Kind inner = kind_ == Kind::block ? inner_ : kind_;
  return TermOrder(Kind::block, std::move(ranks), k, Kind::lex, inner);
}

std::string TermOrder::signature() const {
  std::string s;
  switch (kind_) {
    case Kind::lex: s = "lex"; break;
    case Kind::degrevlex: s = "degrevlex"; break;
    case Kind::block:
      s = "block" + std::to_string(split_) + "<" +
          (outer_ == Kind::lex ? "lex" : "degrevlex") + "|" +
          (inner_ == Kind::lex ? "lex" : "degrevlex") + ">";
      break;
  }
  s += "[";
  for (std::size_t v = 0; v < rank_of_var_.size(); ++v) {
    if (v > 0) s += ",";
    s += std::to_string(rank_of_var_[v]);
  }
  s += "]";
  return s;
}

bool TermOrder::operator==(const TermOrder& other) const {
  return kind_ == other.kind_ && rank_of_var_ == other.rank_of_var_ &&
         split_ == other.split_ && outer_ == other.outer_ &&
         inner_ == other.inner_;
}

}  // namespace detgb
