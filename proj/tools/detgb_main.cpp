#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "detgb/commands.hpp"

namespace {

struct GlobalFlags {
  std::string size;
  std::string field = "Q";
  std::string order = "lex";
  std::string expr;
  std::string json_path;
  bool no_timings = false;
  std::uint64_t max_pairs = 0;
  double timeout_seconds = 0.0;
};

void parse_size(const std::string& size, detgb::CmdOptions& opts) {
  auto x = size.find('x');
  if (x == std::string::npos) x = size.find('X');
  if (x == std::string::npos) {
    throw detgb::DomainError("--size must look like MxN, got '" + size + "'");
  }
  opts.m = static_cast<std::uint32_t>(std::stoul(size.substr(0, x)));
  opts.n = static_cast<std::uint32_t>(std::stoul(size.substr(x + 1)));
}

detgb::CmdOptions make_options(const GlobalFlags& flags) {
  detgb::CmdOptions opts;
  parse_size(flags.size, opts);
  opts.field = flags.field;
  opts.order = flags.order;
  opts.limits.max_pairs = flags.max_pairs;
  opts.limits.timeout_seconds = flags.timeout_seconds;
  return opts;
}

int emit(const detgb::Report& report, const GlobalFlags& flags) {
  detgb::Json j = report.to_json(!flags.no_timings);
  if (flags.json_path == "-") {
    std::cout << j.dump(2) << "\n";
    return detgb::exit_code(report);
  }
  std::cout << detgb::render_text(j);
  if (!flags.json_path.empty()) {
    std::ofstream out(flags.json_path);
    if (!out) {
      throw detgb::DomainError("cannot write JSON report to '" +
                               flags.json_path + "'");
    }
    out << j.dump(2) << "\n";
  }
  return detgb::exit_code(report);
}

void add_limit_flags(CLI::App* cmd, GlobalFlags& flags) {
  cmd->add_option("--max-pairs", flags.max_pairs,
                  "Abort Groebner runs after this many S-pairs (0 = unlimited)");
  cmd->add_option("--timeout-seconds", flags.timeout_seconds,
                  "Abort Groebner runs after this much wall time (0 = unlimited)");
  cmd->add_option("--json", flags.json_path,
                  "Write the JSON report to this file ('-' for stdout)");
  cmd->add_flag("--no-timings", flags.no_timings,
                "Omit wall-clock timings for byte-stable reports");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal ideals, Groebner bases, and verification "
               "certificates for generic matrices"};
  app.require_subcommand(1);

  GlobalFlags flags;
  if (const char* env = std::getenv("DETGB_MAX_PAIRS")) {
    flags.max_pairs = std::strtoull(env, nullptr, 10);
  }
  if (const char* env = std::getenv("DETGB_TIMEOUT_SECONDS")) {
    flags.timeout_seconds = std::strtod(env, nullptr);
  }

  std::uint32_t t = 0, a = 0, b = 0, p = 0;
  std::string axis = "cols";
  std::string corpus_dir = "fixtures";

  auto add_common = [&](CLI::App* cmd, bool need_expr) {
    cmd->add_option("--size", flags.size, "Matrix size MxN")->required();
    cmd->add_option("--field", flags.field, "Coefficient field: Q or Fp:<p>");
    cmd->add_option("--order", flags.order, "Term order: lex or drl");
    if (need_expr) {
      cmd->add_option("--expr", flags.expr, "Ideal expression (DSL)")->required();
    }
    add_limit_flags(cmd, flags);
  };

  CLI::App* gb = app.add_subcommand("gb", "Reduced Groebner basis and initial ideal");
  add_common(gb, true);

  CLI::App* check_union = app.add_subcommand(
      "check-union", "Verify that the union of the per-ideal Groebner bases is one");
  add_common(check_union, true);

  CLI::App* check_dec = app.add_subcommand(
      "check-decomposition", "Verify I_t[a,b-1] + I_t[a+1,b] = I_t[a,b] ∩ I_{t-1}[a+1,b-1]");
  add_common(check_dec, false);
  check_dec->add_option("--t", t, "Minor size")->required();
  check_dec->add_option("--a", a, "Interval start")->required();
  check_dec->add_option("--b", b, "Interval end")->required();
  check_dec->add_option("--axis", axis, "cols (default) or rows");

  CLI::App* height = app.add_subcommand("height", "Height via the initial ideal");
  add_common(height, true);

  CLI::App* knutson = app.add_subcommand("knutson-f", "The splitting polynomial f");
  add_common(knutson, false);

  CLI::App* frob = app.add_subcommand(
      "frobenius", "Frobenius compatibility and F-purity witness over F_p");
  add_common(frob, true);
  frob->add_option("--p", p, "Prime characteristic")->required();

  CLI::App* corpus = app.add_subcommand("corpus", "Run the fixture corpus");
  corpus->add_option("--dir", corpus_dir, "Fixture directory");
  add_limit_flags(corpus, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : detgb::kExitParse;
  }

  try {
    detgb::Report report;
    if (gb->parsed()) {
      report = detgb::cmd_gb(make_options(flags), flags.expr);
    } else if (check_union->parsed()) {
      report = detgb::cmd_check_union(make_options(flags), flags.expr);
    } else if (check_dec->parsed()) {
      detgb::Axis ax = axis == "rows" ? detgb::Axis::rows : detgb::Axis::cols;
      report = detgb::cmd_check_decomposition(make_options(flags), t, a, b, ax);
    } else if (height->parsed()) {
      report = detgb::cmd_height(make_options(flags), flags.expr);
    } else if (knutson->parsed()) {
      report = detgb::cmd_knutson_f(make_options(flags));
    } else if (frob->parsed()) {
      report = detgb::cmd_frobenius(make_options(flags), p, flags.expr);
    } else if (corpus->parsed()) {
      detgb::CmdOptions defaults;
      defaults.limits.max_pairs = flags.max_pairs;
      defaults.limits.timeout_seconds = flags.timeout_seconds;
      report = detgb::cmd_corpus(defaults, corpus_dir);
    }
    return emit(report, flags);
  } catch (const detgb::ParseError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return detgb::kExitParse;
  } catch (const detgb::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return detgb::kExitResource;
  } catch (const detgb::ContextMismatchError& e) {
    std::cerr << "context mismatch: " << e.what() << "\n";
    return detgb::kExitDomain;
  } catch (const detgb::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return detgb::kExitDomain;
  } catch (const detgb::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return detgb::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return detgb::kExitInternal;
  }
}
