#pragma once

#include "detgb/ideal.hpp"
#include "detgb/report.hpp"

namespace detgb {

// Bracket power I^[p]: the ideal generated by the p-th powers of the
// generators. Over the polynomial ring this is independent of the chosen
// generating set. Requires a context over F_p.
IdealHandle frobenius_power(const IdealHandle& I, std::uint32_t p);

// One characteristic-p verification instance: everything lives over the same
// F_p context and bracket holds I^[p].
struct FrobeniusInstance {
  std::uint32_t p;
  IdealHandle ideal;
  Polynomial splitting;
  IdealHandle bracket;
};

FrobeniusInstance make_frobenius_instance(IdealHandle I, Polynomial f,
                                          std::uint32_t p);

// Compatibility of I with the splitting element f^{p-1}: checks the
// membership f^{p-1} * g ∈ I^[p] for every generator g. The report lists a
// verdict per generator.
std::pair<bool, Report> is_compatible(const Polynomial& f, const IdealHandle& I,
                                      std::uint32_t p,
                                      const ResourceLimits& limits = {});
std::pair<bool, Report> is_compatible(const FrobeniusInstance& instance,
                                      const ResourceLimits& limits = {});

// F-purity witness: compatibility plus a term of f^{p-1} with every exponent
// below p (so f^{p-1} lies outside (x11^p, ..., xmn^p)). A positive verdict
// certifies that S/I is F-pure; a failed check reports "inconclusive", never
// "not F-pure".
Report fpure_witness(const IdealHandle& I, const Polynomial& f, std::uint32_t p,
                     const ResourceLimits& limits = {});

}  // namespace detgb
