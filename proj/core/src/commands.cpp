#include "detgb/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

namespace detgb {

namespace {

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

Json inputs_json(const CmdOptions& opts) {
  return Json{{"size", {opts.m, opts.n}},
              {"field", opts.field},
              {"order", opts.order}};
}

Json gb_strings(const ReducedGB& gb) {
  Json arr = Json::array();
  for (const Polynomial& g : gb.members()) arr.push_back(g.to_string());
  return arr;
}

}  // namespace

RingPtr make_context(const CmdOptions& opts) {
  Field field = Field::parse_description(opts.field);
  TermOrder order = [&] {
    if (opts.order == "lex") return TermOrder::row_major_lex(opts.m, opts.n);
    if (opts.order == "drl") {
      return TermOrder::row_major_degrevlex(opts.m, opts.n);
    }
    throw DomainError("unknown order '" + opts.order + "' (expected lex or drl)");
  }();
  return make_ring(opts.m, opts.n, std::move(field), std::move(order));
}

Report cmd_gb(const CmdOptions& opts, const std::string& expr) {
  Stopwatch watch;
  RingPtr ring = make_context(opts);
  IdealExpr ast = parse_ideal_expr(expr, opts.m, opts.n);
  IdealHandle ideal = evaluate(ast, ring, opts.limits);

  Report report;
  report.command = "gb";
  report.inputs = inputs_json(opts);
  report.inputs["expr"] = expr;

  const ReducedGB& gb = ideal.groebner_basis(opts.limits);
  MonomialIdeal in = initial_ideal(gb);
  Json in_gens = Json::array();
  for (const Monomial& g : in.min_gens()) {
    in_gens.push_back(
        Polynomial::term(ring, g, ring->field().one()).to_string());
  }

  report.verdict = Verdict::pass;
  report.certificate = Json{{"provenance", ideal.provenance()},
                            {"gb", gb_strings(gb)},
                            {"initial_ideal", std::move(in_gens)},
                            {"initial_squarefree", is_squarefree(in)}};
  report.statistics = Json{{"gb_size", gb.size()},
                           {"pairs_generated", gb.stats().pairs_generated},
                           {"pairs_reduced", gb.stats().pairs_reduced},
                           {"max_basis_size", gb.stats().max_basis_size}};
  report.wall_ms = watch.ms();
  return report;
}

Report cmd_check_union(const CmdOptions& opts, const std::string& expr) {
  RingPtr ring = make_context(opts);
  IdealExpr ast = parse_ideal_expr(expr, opts.m, opts.n);
  if (!is_pure_minors_sum(ast)) {
    throw DomainError(
        "check-union requires a pure sum of minors ideals (no '&' or colon)");
  }
  std::vector<MinorsIdealSpec> specs = minors_summands(ast);
  Report report = check_union_gb(ring, specs, opts.limits);
  report.inputs["expr"] = expr;
  return report;
}

Report cmd_check_decomposition(const CmdOptions& opts, std::uint32_t t,
                               std::uint32_t a, std::uint32_t b, Axis axis) {
  RingPtr ring = make_context(opts);
  return check_decomposition(ring, t, a, b, axis, opts.limits);
}

Report cmd_height(const CmdOptions& opts, const std::string& expr) {
  Stopwatch watch;
  RingPtr ring = make_context(opts);
  IdealExpr ast = parse_ideal_expr(expr, opts.m, opts.n);
  IdealHandle ideal = evaluate(ast, ring, opts.limits);

  Report report;
  report.command = "height";
  report.inputs = inputs_json(opts);
  report.inputs["expr"] = expr;
  int height = height_via_initial(ideal, opts.limits);
  report.verdict = Verdict::pass;
  report.certificate = Json{{"provenance", ideal.provenance()},
                            {"height", height},
                            {"dimension",
                             static_cast<int>(ring->var_count()) - height}};
  report.wall_ms = watch.ms();
  return report;
}

Report cmd_knutson_f(const CmdOptions& opts) {
  Stopwatch watch;
  RingPtr ring = make_context(opts);
  KnutsonPolynomial kf = knutson_f(ring);

  Monomial all_vars(ring->var_count());
  for (std::size_t v = 0; v < ring->grid_var_count(); ++v) {
    all_vars = all_vars.times_var(v);
  }
  const Monomial& lt = kf.f.leading_monomial();
  bool squarefree = lt.is_squarefree();
  bool product_of_all = lt == all_vars;

  Report report;
  report.command = "knutson-f";
  report.inputs = inputs_json(opts);
  Json factors = Json::array();
  for (const Polynomial& factor : kf.factors) factors.push_back(factor.to_string());
  report.certificate =
      Json{{"factor_count", kf.factors.size()},
           {"factors", std::move(factors)},
           {"leading_term",
            Polynomial::term(ring, lt, kf.f.leading_coeff()).to_string()},
           {"leading_term_squarefree", squarefree},
           {"leading_term_is_product_of_all_variables", product_of_all},
           {"term_count", kf.f.term_count()}};
  report.verdict =
      squarefree && product_of_all ? Verdict::pass : Verdict::fail;
  report.wall_ms = watch.ms();
  return report;
}

Report cmd_frobenius(const CmdOptions& opts, std::uint32_t p,
                     const std::string& expr) {
  Stopwatch watch;
  CmdOptions fp_opts = opts;
  std::string fp_desc = "Fp:" + std::to_string(p);
  if (fp_opts.field != "Q" && fp_opts.field != fp_desc) {
    throw DomainError("frobenius runs over " + fp_desc + ", got --field " +
                      fp_opts.field);
  }
  fp_opts.field = fp_desc;

  RingPtr ring = make_context(fp_opts);
  IdealExpr ast = parse_ideal_expr(expr, opts.m, opts.n);
  IdealHandle ideal = evaluate(ast, ring, opts.limits);
  KnutsonPolynomial kf = knutson_f(ring);

  Report witness = fpure_witness(ideal, kf.f, p, opts.limits);
  witness.command = "frobenius";
  witness.inputs = inputs_json(fp_opts);
  witness.inputs["expr"] = expr;
  witness.inputs["p"] = p;
  witness.wall_ms = watch.ms();
  return witness;
}

namespace {

Report run_fixture(const Json& fixture, const CmdOptions& defaults) {
  CmdOptions opts = defaults;
  const auto& size = fixture.at("size");
  opts.m = size.at(0).get<std::uint32_t>();
  opts.n = size.at(1).get<std::uint32_t>();
  if (fixture.contains("field")) opts.field = fixture.at("field").get<std::string>();
  if (fixture.contains("order")) opts.order = fixture.at("order").get<std::string>();

  const std::string command = fixture.at("command").get<std::string>();
  if (command == "gb") return cmd_gb(opts, fixture.at("expr").get<std::string>());
  if (command == "check-union") {
    return cmd_check_union(opts, fixture.at("expr").get<std::string>());
  }
  if (command == "check-decomposition") {
    const Json& params = fixture.at("params");
    Axis axis = params.value("axis", "cols") == "rows" ? Axis::rows : Axis::cols;
    return cmd_check_decomposition(opts, params.at("t").get<std::uint32_t>(),
                                   params.at("a").get<std::uint32_t>(),
                                   params.at("b").get<std::uint32_t>(), axis);
  }
  if (command == "height") {
    return cmd_height(opts, fixture.at("expr").get<std::string>());
  }
  if (command == "knutson-f") return cmd_knutson_f(opts);
  if (command == "frobenius") {
    return cmd_frobenius(opts, fixture.at("params").at("p").get<std::uint32_t>(),
                         fixture.at("expr").get<std::string>());
  }
  throw DomainError("fixture has unknown command '" + command + "'");
}

}  // namespace

Report cmd_corpus(const CmdOptions& defaults, const std::filesystem::path& dir) {
  Stopwatch watch;
  if (!std::filesystem::is_directory(dir)) {
    throw DomainError("corpus directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw DomainError("corpus directory '" + dir.string() + "' has no fixtures");
  }

  Report report;
  report.command = "corpus";
  report.inputs = Json{{"dir", dir.string()}, {"fixtures", files.size()}};
  Json rows = Json::array();
  std::size_t passed = 0;

  for (const auto& file : files) {
    std::ifstream in(file);
    Json fixture;
    Json row{{"fixture", file.filename().string()}};
    try {
      fixture = Json::parse(in);
      row["name"] = fixture.value("name", file.filename().string());
      Report result = run_fixture(fixture, defaults);
      std::string expected =
          fixture.contains("expect")
              ? fixture.at("expect").value("verdict", "pass")
              : "pass";
      std::string actual = to_string(result.verdict);
      bool ok = expected == actual;

      if (ok && fixture.contains("expect")) {
        const Json& expect = fixture.at("expect");
        for (const auto& [key, value] : expect.items()) {
          if (key == "verdict") continue;
          if (!result.certificate.contains(key) ||
              result.certificate.at(key) != value) {
            ok = false;
            row["mismatch"] = Json{{"key", key},
                                   {"expected", value},
                                   {"actual", result.certificate.value(key, Json())}};
            break;
          }
        }
      }

      row["expected"] = expected;
      row["actual"] = actual;
      row["ok"] = ok;
      if (!ok && result.certificate.contains("witness")) {
        row["witness"] = result.certificate.at("witness");
      }
      if (ok) ++passed;
    } catch (const std::exception& e) {
      // A broken fixture (bad JSON, missing keys, invalid inputs) fails that
      // row; the rest of the corpus still runs.
      row["ok"] = false;
      row["error"] = e.what();
    }
    rows.push_back(std::move(row));
  }

  report.certificate = Json{{"results", std::move(rows)}};
  report.statistics = Json{{"total", files.size()}, {"passed", passed}};
  report.verdict = passed == files.size() ? Verdict::pass : Verdict::fail;
  report.wall_ms = watch.ms();
  return report;
}

std::string render_text(const Json& report) {
  std::string out;
  out += "detgb " + report.value("command", "?") + ": " +
         report.value("verdict", "?") + "\n";
  if (report.contains("inputs")) {
    out += "  inputs: " + report.at("inputs").dump() + "\n";
  }
  if (report.value("command", "") == "corpus" &&
      report.contains("certificate") &&
      report.at("certificate").contains("results")) {
    for (const Json& row : report.at("certificate").at("results")) {
      out += std::string("  ") + (row.value("ok", false) ? "[ok]   " : "[FAIL] ") +
             row.value("fixture", "?") + "  expected=" +
             row.value("expected", "-") + " actual=" + row.value("actual", "-");
      if (row.contains("error")) out += "  error: " + row.at("error").get<std::string>();
      out += "\n";
    }
    if (report.contains("statistics")) {
      out += "  statistics: " + report.at("statistics").dump() + "\n";
    }
    if (report.contains("timings")) {
      out += "  timings: " + report.at("timings").dump() + "\n";
    }
    return out;
  }
  if (report.contains("certificate")) {
    const Json& cert = report.at("certificate");
    for (const auto& [key, value] : cert.items()) {
      std::string rendered = value.dump(2);
      // Indent nested dumps for readability.
      std::string indented;
      for (char c : rendered) {
        indented += c;
        if (c == '\n') indented += "    ";
      }
      out += "  " + key + ": " + indented + "\n";
    }
  }
  if (report.contains("statistics")) {
    out += "  statistics: " + report.at("statistics").dump() + "\n";
  }
  if (report.contains("timings")) {
    out += "  timings: " + report.at("timings").dump() + "\n";
  }
  return out;
}

int exit_code(const Report& report) {
  switch (report.verdict) {
    case Verdict::pass: return kExitPass;
    case Verdict::fail: return kExitFail;
    case Verdict::inconclusive: return kExitInconclusive;
    case Verdict::resource_limit: return kExitResource;
  }
  return kExitInternal;
}

}  // namespace detgb
