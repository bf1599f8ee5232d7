#include "detgb/frobenius.hpp"

#include <chrono>

namespace detgb {

namespace {

void require_char_p(const RingPtr& ring, std::uint32_t p) {
  if (!ring->field().is_prime_field() || ring->field().characteristic() != p) {
    throw DomainError("context is over " + ring->field().description() +
                      ", expected Fp:" + std::to_string(p));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

IdealHandle frobenius_power(const IdealHandle& I, std::uint32_t p) {
  require_char_p(I.ring(), p);
  std::vector<Polynomial> powers;
  powers.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) powers.push_back(g.pow(p));
  return IdealHandle::from_generators(
      I.ring(), std::move(powers),
      "frobenius(" + I.provenance() + ", p=" + std::to_string(p) + ")");
}

FrobeniusInstance make_frobenius_instance(IdealHandle I, Polynomial f,
                                          std::uint32_t p) {
  require_char_p(I.ring(), p);
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) throw DomainError("splitting polynomial must be nonzero");
  IdealHandle bracket = frobenius_power(I, p);
  return FrobeniusInstance{p, std::move(I), std::move(f), std::move(bracket)};
}

std::pair<bool, Report> is_compatible(const Polynomial& f, const IdealHandle& I,
                                      std::uint32_t p,
                                      const ResourceLimits& limits) {
  return is_compatible(make_frobenius_instance(I, f, p), limits);
}

std::pair<bool, Report> is_compatible(const FrobeniusInstance& instance,
                                      const ResourceLimits& limits) {
  const IdealHandle& I = instance.ideal;
  const Polynomial& f = instance.splitting;
  const std::uint32_t p = instance.p;

  auto start = std::chrono::steady_clock::now();
  Report report;
  report.command = "is-compatible";
  report.inputs = Json{{"p", p},
                       {"ideal", I.provenance()},
                       {"splitting_degree", f.degree()}};

  try {
    const ReducedGB& bracket_gb = instance.bracket.groebner_basis(limits);
    Polynomial multiplier = f.pow(p - 1);

    Json checks = Json::array();
    bool all_in = true;
    for (const Polynomial& g : I.generators()) {
      Polynomial rem = bracket_gb.is_zero_ideal()
                           ? multiplier * g
                           : normal_form(multiplier * g, bracket_gb.members());
      bool in = rem.is_zero();
      all_in = all_in && in;
      Json entry{{"generator", g.to_string()}, {"member", in}};
      if (!in) entry["remainder"] = rem.to_string();
      checks.push_back(std::move(entry));
    }
    report.certificate["membership"] = std::move(checks);
    report.verdict = all_in ? Verdict::pass : Verdict::fail;
    report.statistics["bracket_gb_size"] = bracket_gb.size();
    report.wall_ms = elapsed_ms(start);
    return {all_in, std::move(report)};
  } catch (const ResourceLimitError& e) {
    report.verdict = Verdict::resource_limit;
    report.certificate["error"] = e.what();
    report.wall_ms = elapsed_ms(start);
    return {false, std::move(report)};
  }
}

Report fpure_witness(const IdealHandle& I, const Polynomial& f, std::uint32_t p,
                     const ResourceLimits& limits) {
  require_char_p(I.ring(), p);
  auto start = std::chrono::steady_clock::now();

  Report report;
  report.command = "fpure-witness";
  report.inputs = Json{{"p", p}, {"ideal", I.provenance()}};

  auto [compatible, compat_report] = is_compatible(f, I, p, limits);
  report.certificate["compatibility"] = compat_report.to_json(false)["certificate"];
  if (compat_report.verdict == Verdict::resource_limit) {
    report.verdict = Verdict::resource_limit;
    report.wall_ms = elapsed_ms(start);
    return report;
  }

  // Witness that f^{p-1} avoids (x11^p, ..., xmn^p): a term with every
  // exponent strictly below p.
  Polynomial multiplier = f.pow(p - 1);
  const Term* witness = nullptr;
  for (const Term& t : multiplier.terms()) {
    bool below = true;
    for (std::uint32_t e : t.monomial.exponents()) {
      if (e >= p) {
        below = false;
        break;
      }
    }
    if (below) {
      witness = &t;
      break;
    }
  }

  if (witness != nullptr) {
    report.certificate["splitting_witness"] =
        Polynomial::term(I.ring(), witness->monomial, witness->coeff).to_string();
  }

  if (compatible && witness != nullptr) {
    report.verdict = Verdict::pass;
    report.certificate["f_pure"] = true;
  } else {
    // A missing witness or failed membership does not disprove F-purity.
    report.verdict = Verdict::inconclusive;
    report.certificate["f_pure"] = "inconclusive";
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace detgb
