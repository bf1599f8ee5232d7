#pragma once

#include <filesystem>

#include "detgb/expr.hpp"
#include "detgb/frobenius.hpp"

namespace detgb {

// Exit codes shared by the CLI and the corpus runner. Zero means every check
// in the invocation passed; each failure class gets its own code.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitDomain = 4;
inline constexpr int kExitResource = 5;
inline constexpr int kExitInternal = 6;

struct CmdOptions {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::string field = "Q";   // "Q" or "Fp:<p>"
  std::string order = "lex"; // "lex" or "drl"
  ResourceLimits limits;
};

RingPtr make_context(const CmdOptions& opts);

// Reduced basis, initial ideal, squarefree flag for an ideal expression.
Report cmd_gb(const CmdOptions& opts, const std::string& expr);

// Union-of-Groebner-bases check for a pure sum of minors ideals under a
// diagonal order.
Report cmd_check_union(const CmdOptions& opts, const std::string& expr);

Report cmd_check_decomposition(const CmdOptions& opts, std::uint32_t t,
                               std::uint32_t a, std::uint32_t b, Axis axis);

// Height of the ideal via its initial ideal.
Report cmd_height(const CmdOptions& opts, const std::string& expr);

// Builds f, lists its factors, and verifies the squarefree-leading-term
// hypothesis (the leading term must be the product of all m*n variables).
Report cmd_knutson_f(const CmdOptions& opts);

// Compatibility + F-purity witness over F_p with f = knutson_f(m, n).
Report cmd_frobenius(const CmdOptions& opts, std::uint32_t p,
                     const std::string& expr);

// Runs every fixture file (*.json) in the directory, in filename order, and
// compares verdicts against expectations.
Report cmd_corpus(const CmdOptions& defaults, const std::filesystem::path& dir);

// Human-readable rendering of a report JSON (never a separate code path).
std::string render_text(const Json& report);

int exit_code(const Report& report);

}  // namespace detgb
