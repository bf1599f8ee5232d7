#include "detgb/determinantal.hpp"

#include <algorithm>
#include <chrono>

namespace detgb {

namespace {

std::string interval(std::uint32_t lo, std::uint32_t hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

// Strictly increasing t-subsets of {lo..hi} in lexicographic order.
std::vector<std::vector<std::uint32_t>> combinations(std::uint32_t lo,
                                                     std::uint32_t hi,
                                                     std::uint32_t t) {
  std::vector<std::vector<std::uint32_t>> out;
  if (t == 0 || hi < lo || hi - lo + 1 < t) return out;
  std::vector<std::uint32_t> cur(t);
  for (std::uint32_t k = 0; k < t; ++k) cur[k] = lo + k;
  while (true) {
    out.push_back(cur);
    // advance
    std::int64_t k = t - 1;
    while (k >= 0 && cur[k] == hi - (t - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (std::uint32_t r = static_cast<std::uint32_t>(k) + 1; r < t; ++r) {
      cur[r] = cur[r - 1] + 1;
    }
  }
  return out;
}

Json gb_to_json(const ReducedGB& gb) {
  Json arr = Json::array();
  for (const Polynomial& g : gb.members()) arr.push_back(g.to_string());
  return arr;
}

Json stats_to_json(const GBStats& stats) {
  return Json{{"pairs_generated", stats.pairs_generated},
              {"pairs_reduced", stats.pairs_reduced},
              {"max_basis_size", stats.max_basis_size}};
}

Json certificate_to_json(const GBCertificate& cert) {
  Json checks = Json::array();
  std::uint64_t skipped = 0, reduced = 0;
  for (const PairCheck& c : cert.checks) {
    Json entry{{"i", c.i}, {"j", c.j}};
    if (c.skipped_coprime) {
      entry["status"] = "skipped-coprime";
      ++skipped;
    } else if (c.remainder.is_zero()) {
      entry["status"] = "zero";
      ++reduced;
    } else {
      entry["status"] = "nonzero";
      entry["remainder"] = c.remainder.to_string();
      ++reduced;
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"is_basis", cert.is_basis},
              {"pairs_total", cert.checks.size()},
              {"pairs_skipped_coprime", skipped},
              {"pairs_reduced", reduced},
              {"checks", std::move(checks)}};
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

void RegionSpec::validate(std::uint32_t m, std::uint32_t n) const {
  if (!(1 <= col_lo && col_lo <= col_hi && col_hi <= n) ||
      !(1 <= row_lo && row_lo <= row_hi && row_hi <= m)) {
    throw DomainError("region " + to_string(m, n) + " out of range for " +
                      std::to_string(m) + "x" + std::to_string(n));
  }
}

std::string RegionSpec::to_string(std::uint32_t m, std::uint32_t n) const {
  bool all_rows = row_lo == 1 && row_hi == m;
  bool all_cols = col_lo == 1 && col_hi == n;
  if (all_rows && all_cols) return "X";
  std::string s = "X[";
  if (!all_rows) s += "rows=" + interval(row_lo, row_hi);
  if (!all_rows && !all_cols) s += ", ";
  if (!all_cols) s += "cols=" + interval(col_lo, col_hi);
  return s + "]";
}

void MinorsIdealSpec::validate(std::uint32_t m, std::uint32_t n) const {
  region.validate(m, n);
  if (t < 1) throw DomainError("minor size must be at least 1");
  if (t > region.row_count() || t > region.col_count()) {
    throw DomainError("minor size " + std::to_string(t) +
                      " exceeds region " + region.to_string(m, n));
  }
}

std::string MinorsIdealSpec::to_string(std::uint32_t m, std::uint32_t n) const {
  return "I(" + std::to_string(t) + ", " + region.to_string(m, n) + ")";
}

Polynomial minor(const RingPtr& ring, std::span<const std::uint32_t> rows,
                 std::span<const std::uint32_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw DomainError("minor requires equal-length nonempty index lists");
  }
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    if (rows[k] >= rows[k + 1] || cols[k] >= cols[k + 1]) {
      throw DomainError("minor indices must be strictly increasing");
    }
  }
  if (rows.back() > ring->rows() || cols.back() > ring->cols() ||
      rows.front() < 1 || cols.front() < 1) {
    throw DomainError("minor indices out of range");
  }

  // Cofactor expansion along the first remaining row.
  std::vector<std::uint32_t> rs(rows.begin(), rows.end());
  auto expand = [&](auto&& self, std::span<const std::uint32_t> r,
                    std::vector<std::uint32_t> c) -> Polynomial {
    if (r.size() == 1) return Polynomial::variable(ring, ring->var_index(r[0], c[0]));
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t k = 0; k < c.size(); ++k) {
      Polynomial x = Polynomial::variable(ring, ring->var_index(r[0], c[k]));
      std::vector<std::uint32_t> rest;
      rest.reserve(c.size() - 1);
      for (std::size_t l = 0; l < c.size(); ++l) {
        if (l != k) rest.push_back(c[l]);
      }
      Polynomial cofactor = self(self, r.subspan(1), std::move(rest));
      Polynomial contrib = x * cofactor;
      acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
  };
  return expand(expand, rs, std::vector<std::uint32_t>(cols.begin(), cols.end()));
}

IdealHandle minors_ideal(const RingPtr& ring, const MinorsIdealSpec& spec) {
  if (spec.t == 0) {
    // Convention: the empty minor is 1, so I_0 is the unit ideal.
    std::vector<Polynomial> one;
    one.push_back(Polynomial::from_int(ring, 1));
    return IdealHandle::from_generators(
        ring, std::move(one), "I(0, " + spec.region.to_string(ring->rows(), ring->cols()) + ")");
  }
  spec.validate(ring->rows(), ring->cols());

  std::vector<Polynomial> gens;
  auto row_sets = combinations(spec.region.row_lo, spec.region.row_hi, spec.t);
  auto col_sets = combinations(spec.region.col_lo, spec.region.col_hi, spec.t);
  gens.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      gens.push_back(minor(ring, rs, cs));
    }
  }
  return IdealHandle::from_generators(
      ring, std::move(gens), spec.to_string(ring->rows(), ring->cols()));
}

namespace {

Polynomial range_minor(const RingPtr& ring, std::uint32_t row_lo,
                       std::uint32_t row_hi, std::uint32_t col_lo,
                       std::uint32_t col_hi) {
  std::vector<std::uint32_t> rs, cs;
  for (std::uint32_t r = row_lo; r <= row_hi; ++r) rs.push_back(r);
  for (std::uint32_t c = col_lo; c <= col_hi; ++c) cs.push_back(c);
  return minor(ring, rs, cs);
}

}  // namespace

KnutsonPolynomial knutson_f(const RingPtr& ring) {
  std::uint32_t m = ring->rows(), n = ring->cols();
  if (m < 2 || m >= n) {
    throw DomainError("knutson_f requires 2 <= m < n, got " + std::to_string(m) +
                      "x" + std::to_string(n));
  }
  KnutsonPolynomial out{Polynomial::from_int(ring, 1), {}};
  for (std::uint32_t k = 0; k + 2 <= m; ++k) {
    // Lower-left corner minor on rows m-k..m, columns 1..k+1.
    out.factors.push_back(range_minor(ring, m - k, m, 1, k + 1));
    // Upper-right corner minor on rows 1..k+1, columns n-k..n.
    out.factors.push_back(range_minor(ring, 1, k + 1, n - k, n));
  }
  for (std::uint32_t k = 1; k <= n - m + 1; ++k) {
    out.factors.push_back(range_minor(ring, 1, m, k, m + k - 1));
  }
  for (const Polynomial& factor : out.factors) out.f = out.f * factor;
  return out;
}

IdealHandle lemma_H(const RingPtr& ring, std::uint32_t t, std::uint32_t i) {
  std::uint32_t m = ring->rows(), n = ring->cols();
  if (m >= n) throw DomainError("lemma_H requires m < n");
  if (t < 1 || t > m || i < 1 || i > n - t + 1) {
    throw DomainError("lemma_H parameters out of range");
  }

  auto window = [&](std::uint32_t s) {
    if (s < 1 || s + m - 1 > n) {
      throw DomainError("sliding window " + interval(s, s + m - 1) +
                        " out of range in lemma_H");
    }
    return range_minor(ring, 1, m, s, s + m - 1);
  };

  std::vector<Polynomial> gens;
  if (m - t + 1 <= i && i <= n - m + 1) {
    // All m-t+1 sliding maximal minors, windows i down to i-m+t.
    for (std::uint32_t s = i; s + m >= i + t; --s) {
      gens.push_back(window(s));
      if (s + m == i + t) break;
    }
  } else if (i <= m - t) {
    // Sliding maximal minors on windows 1..i plus lower-left corner minors
    // of sizes t+i-1 .. m-1.
    for (std::uint32_t s = 1; s <= i; ++s) gens.push_back(window(s));
    for (std::uint32_t sz = t + i - 1; sz <= m - 1; ++sz) {
      gens.push_back(range_minor(ring, m - sz + 1, m, 1, sz));
    }
  } else if (i >= n - m + 2) {
    // Sliding maximal minors on windows n-m+1 down to t+i-m plus upper-right
    // corner minors of sizes n-i+1 .. m-1.
    if (t + i < m + 1) {
      throw DomainError("lemma_H third case needs t+i-m >= 1");
    }
    for (std::uint32_t s = n - m + 1; s >= t + i - m; --s) {
      gens.push_back(window(s));
      if (s == t + i - m) break;
    }
    for (std::uint32_t sz = n - i + 1; sz <= m - 1; ++sz) {
      gens.push_back(range_minor(ring, 1, sz, n - sz + 1, n));
    }
  } else {
    throw Error("internal: lemma_H case analysis missed (t,i)");
  }

  if (gens.size() != m - t + 1) {
    throw Error("internal: lemma_H generator count " +
                std::to_string(gens.size()) + " != m-t+1");
  }
  return IdealHandle::from_generators(
      ring, std::move(gens),
      "H(t=" + std::to_string(t) + ", i=" + std::to_string(i) + ")");
}

bool is_diagonal_order(const TermOrder& order, std::uint32_t m, std::uint32_t n,
                       std::uint32_t tmax) {
  if (tmax > std::min(m, n)) {
    throw DomainError("tmax exceeds min(m, n)");
  }
  RingPtr probe = make_ring(m, n, Field::rationals(), order);
  for (std::uint32_t t = 1; t <= tmax; ++t) {
    for (const auto& rs : combinations(1, m, t)) {
      for (const auto& cs : combinations(1, n, t)) {
        Polynomial det = minor(probe, rs, cs);
        Monomial diag(probe->var_count());
        for (std::uint32_t k = 0; k < t; ++k) {
          diag = diag.times_var(probe->var_index(rs[k], cs[k]));
        }
        if (det.leading_monomial() != diag) return false;
      }
    }
  }
  return true;
}

Report check_ideal_equality(const IdealHandle& lhs, const IdealHandle& rhs,
                            const ResourceLimits& limits) {
  require_same_ring(lhs.ring(), rhs.ring());
  Stopwatch watch;
  Report report;
  report.command = "check-equal";
  report.inputs = Json{{"lhs", lhs.provenance()}, {"rhs", rhs.provenance()}};
  report.certificate["identity"] = lhs.provenance() + " == " + rhs.provenance();

  try {
    const ReducedGB& lhs_gb = lhs.groebner_basis(limits);
    const ReducedGB& rhs_gb = rhs.groebner_basis(limits);
    bool equal = lhs_gb == rhs_gb;
    report.verdict = equal ? Verdict::pass : Verdict::fail;
    report.certificate["lhs_gb"] = gb_to_json(lhs_gb);
    report.certificate["rhs_gb"] = gb_to_json(rhs_gb);
    report.statistics["lhs"] = stats_to_json(lhs_gb.stats());
    report.statistics["rhs"] = stats_to_json(rhs_gb.stats());
    if (!equal) {
      // Witness: a basis member of one side outside the other ideal, with
      // its nonzero normal form. Unequal reduced bases mean unequal ideals,
      // so one direction must produce such a member.
      Json witness;
      for (const Polynomial& g : lhs_gb.members()) {
        Polynomial rem = rhs_gb.is_zero_ideal()
                             ? g
                             : normal_form(g, rhs_gb.members());
        if (!rem.is_zero()) {
          witness = Json{{"side", "lhs-only"},
                         {"member", g.to_string()},
                         {"remainder", rem.to_string()}};
          break;
        }
      }
      if (witness.is_null()) {
        for (const Polynomial& g : rhs_gb.members()) {
          Polynomial rem = lhs_gb.is_zero_ideal()
                               ? g
                               : normal_form(g, lhs_gb.members());
          if (!rem.is_zero()) {
            witness = Json{{"side", "rhs-only"},
                           {"member", g.to_string()},
                           {"remainder", rem.to_string()}};
            break;
          }
        }
      }
      report.certificate["witness"] = std::move(witness);
    }
  } catch (const ResourceLimitError& e) {
    report.verdict = Verdict::resource_limit;
    report.certificate["error"] = e.what();
  }

  report.wall_ms = watch.ms();
  return report;
}

Report check_decomposition(const RingPtr& ring, std::uint32_t t, std::uint32_t a,
                           std::uint32_t b, Axis axis,
                           const ResourceLimits& limits) {
  std::uint32_t m = ring->rows(), n = ring->cols();
  std::uint32_t span_hi = axis == Axis::cols ? n : m;
  if (!(1 <= a && a < b && b <= span_hi)) {
    throw DomainError("interval [" + interval(a, b) + "] out of range");
  }
  if (b - a < t) {
    throw DomainError("interval [" + interval(a, b) +
                      "] too narrow: need b-a >= t");
  }
  if (t < 1 || t > (axis == Axis::cols ? m : n)) {
    throw DomainError("minor size out of range");
  }

  auto region = [&](std::uint32_t lo, std::uint32_t hi) {
    return axis == Axis::cols ? RegionSpec::cols(m, lo, hi)
                              : RegionSpec::rows(n, lo, hi);
  };

  Stopwatch watch;
  Report report;
  report.command = "check-decomposition";
  report.inputs = Json{{"size", {m, n}},
                       {"field", ring->field().description()},
                       {"order", ring->order().signature()},
                       {"t", t},
                       {"a", a},
                       {"b", b},
                       {"axis", axis == Axis::cols ? "cols" : "rows"}};

  IdealHandle left = minors_ideal(ring, {t, region(a, b - 1)});
  IdealHandle right = minors_ideal(ring, {t, region(a + 1, b)});
  IdealHandle outer = minors_ideal(ring, {t, region(a, b)});
  IdealHandle inner = t == 1 ? unit_ideal(ring)
                             : minors_ideal(ring, {t - 1, region(a + 1, b - 1)});

  IdealHandle lhs = sum(left, right);
  try {
    IdealHandle rhs_handle = intersect(outer, inner, limits);
    Report equality = check_ideal_equality(lhs, rhs_handle, limits);
    report.verdict = equality.verdict;
    report.certificate = std::move(equality.certificate);
    report.statistics = std::move(equality.statistics);
  } catch (const ResourceLimitError& e) {
    report.verdict = Verdict::resource_limit;
    report.certificate["error"] = e.what();
  }

  report.wall_ms = watch.ms();
  return report;
}

Report check_union_gb(const RingPtr& ring, std::span<const MinorsIdealSpec> specs,
                      const ResourceLimits& limits) {
  std::uint32_t m = ring->rows(), n = ring->cols();
  if (specs.empty()) throw DomainError("check_union_gb requires at least one ideal");

  std::uint32_t tmax = 1;
  for (const MinorsIdealSpec& spec : specs) {
    spec.validate(m, n);
    bool col_interval = spec.region.row_lo == 1 && spec.region.row_hi == m;
    bool row_interval = spec.region.col_lo == 1 && spec.region.col_hi == n;
    if (!col_interval && !row_interval) {
      throw DomainError("region " + spec.region.to_string(m, n) +
                        " is neither a column nor a row interval");
    }
    tmax = std::max(tmax, spec.t);
  }
  if (!is_diagonal_order(ring->order(), m, n, tmax)) {
    throw DomainError("ambient order is not diagonal up to t=" +
                      std::to_string(tmax));
  }

  Stopwatch watch;
  Report report;
  report.command = "check-union";
  Json spec_names = Json::array();
  for (const MinorsIdealSpec& spec : specs) spec_names.push_back(spec.to_string(m, n));
  report.inputs = Json{{"size", {m, n}},
                       {"field", ring->field().description()},
                       {"order", ring->order().signature()},
                       {"ideals", spec_names}};

  try {
    Json region_entries = Json::array();
    std::vector<Polynomial> united;
    bool all_regions_ok = true;
    for (const MinorsIdealSpec& spec : specs) {
      IdealHandle ideal = minors_ideal(ring, spec);
      auto [ok, cert] = is_groebner(ideal.generators(), limits);
      Json entry{{"ideal", spec.to_string(m, n)},
                 {"generators", ideal.generators().size()},
                 {"minors_form_gb", ok}};
      if (!ok) {
        all_regions_ok = false;
        for (const PairCheck& c : cert.checks) {
          if (!c.remainder.is_zero()) {
            entry["witness"] = Json{{"i", c.i},
                                    {"j", c.j},
                                    {"remainder", c.remainder.to_string()}};
            break;
          }
        }
      }
      region_entries.push_back(std::move(entry));
      united.insert(united.end(), ideal.generators().begin(),
                    ideal.generators().end());
    }
    report.certificate["regions"] = std::move(region_entries);

    if (!all_regions_ok) {
      report.verdict = Verdict::fail;
    } else {
      auto [ok, cert] = is_groebner(united, limits);
      report.verdict = ok ? Verdict::pass : Verdict::fail;
      report.certificate["union"] = certificate_to_json(cert);
      report.statistics["union_generators"] = united.size();
    }
  } catch (const ResourceLimitError& e) {
    report.verdict = Verdict::resource_limit;
    report.certificate["error"] = e.what();
  }

  report.wall_ms = watch.ms();
  return report;
}

}  // namespace detgb
