#include "sparseres/io.hpp"
#include "sparseres/reconstruct.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace sparseres;

namespace {

struct CommonArgs {
  std::string input;
  int precision = 0;  // 0 = take from file options / command default
  double tol = 0;     // 0 = precision default
  std::int64_t seed = -1;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_input = true) {
  auto* opt = cmd->add_option("--input", a.input, "problem file (JSON)");
  if (needs_input) opt->required();
  cmd->add_option("--precision", a.precision, "working precision in bits");
  cmd->add_option("--tol", a.tol, "acceptance tolerance for numeric results");
  cmd->add_option("--seed", a.seed, "seed for all randomized choices");
  cmd->add_flag("--json", a.json, "machine-readable JSON output");
}

int effective_precision(const CommonArgs& a, const ProblemFile& pf, int fallback) {
  if (a.precision > 0) return a.precision;
  if (pf.options.precision) return *pf.options.precision;
  return fallback;
}

std::uint64_t effective_seed(const CommonArgs& a, const ProblemFile& pf) {
  return a.seed >= 0 ? static_cast<std::uint64_t>(a.seed) : pf.options.seed;
}

template <typename T>
T effective_tol(const CommonArgs& a, const ProblemFile& pf) {
  if (a.tol > 0) return T(a.tol);
  if (pf.options.tolerance) return T(*pf.options.tolerance);
  return FieldTraits<T>::tolerance();
}

template <typename T>
Json num(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return x;
  else
    return x.str();  // keep the full software-float precision
}

template <typename T>
Json cnum(const Complex<T>& z) {
  return Json::array({num(z.re), num(z.im)});
}

Json ivec(const IntVector& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(x.convert_to<long long>());
  return out;
}

void emit(const Json& out, const std::vector<std::string>& text, bool json) {
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& line : text) std::cout << line << "\n";
  }
}

int cmd_analyze(const CommonArgs& a) {
  auto pf = load_problem(a.input);
  auto rep = analyze(pf.family());
  Json out;
  out["n"] = pf.n;
  out["resultant_trivial"] = rep.resultant_trivial;
  out["essential_index_sets"] = rep.essential_index_sets;
  out["unique_essential"] = rep.unique_essential ? Json(*rep.unique_essential) : Json(nullptr);
  Json degs = Json::array();
  for (const auto& d : rep.degrees) degs.push_back(d.convert_to<long long>());
  out["degrees"] = degs;
  out["d_A"] = rep.exponent_dA.convert_to<long long>();
  out["height_bound"] = rep.height_bound;

  std::vector<std::string> text;
  text.push_back("trivial: " + std::string(rep.resultant_trivial ? "yes" : "no"));
  std::string ds;
  for (const auto& d : rep.degrees) ds += (ds.empty() ? "" : ", ") + d.str();
  text.push_back("degrees: (" + ds + ")");
  text.push_back("d_A: " + rep.exponent_dA.str());
  text.push_back("height bound: " + std::to_string(rep.height_bound));
  emit(out, text, a.json);
  return 0;
}

template <typename T>
int run_eval(const CommonArgs& a, const ProblemFile& pf) {
  if (!pf.polynomials) throw InputError("'eval' needs polynomial coefficients");
  auto f = numeric_polynomials<T>(*pf.polynomials);
  auto rv = eval_sparse_resultant(pf.family(), f, effective_seed(a, pf));
  Json out;
  out["value"] = cnum(rv.value);
  out["modulus"] = num(abs(rv.value));
  out["sign_ambiguous"] = rv.sign_ambiguous;
  out["precision"] = rv.precision;
  out["trace"] = rv.trace;
  std::vector<std::string> text;
  text.push_back("resultant (up to sign): " + Json(cnum(rv.value)).dump());
  text.push_back("modulus: " + Json(num(abs(rv.value))).dump());
  emit(out, text, a.json);
  return 0;
}

template <typename T>
int run_solve(const CommonArgs& a, const ProblemFile& pf) {
  if (pf.supports.size() != pf.n)
    throw InputError("'solve' needs a square system: n supports for n unknowns");
  if (!pf.polynomials) throw InputError("'solve' needs polynomial coefficients");
  auto f = numeric_polynomials<T>(*pf.polynomials);
  auto r = solve_square_system(f, effective_seed(a, pf));
  if (r.residual > effective_tol<T>(a, pf))
    throw NumericalError("solver residual exceeds the tolerance");
  Json roots = Json::array();
  long long total = 0;
  for (const auto& [x, m] : r.roots) {
    Json pt = Json::array();
    for (const auto& xi : x) pt.push_back(cnum(xi));
    roots.push_back(Json{{"point", pt}, {"multiplicity", m}});
    total += m;
  }
  Json out;
  out["roots"] = roots;
  out["total_multiplicity"] = total;
  out["residual"] = num(r.residual);
  std::vector<std::string> text;
  text.push_back(std::to_string(r.roots.size()) + " distinct roots, total multiplicity " +
                 std::to_string(total));
  for (const auto& [x, m] : r.roots) {
    Json pt = Json::array();
    for (const auto& xi : x) pt.push_back(cnum(xi));
    text.push_back("  " + pt.dump() + " x" + std::to_string(m));
  }
  emit(out, text, a.json);
  return 0;
}

template <typename T>
int run_hide(const CommonArgs& a, const ProblemFile& pf, std::size_t hide_index) {
  if (pf.supports.size() != pf.n)
    throw InputError("'hide' needs a square system: n supports for n unknowns");
  if (!pf.polynomials) throw InputError("'hide' needs polynomial coefficients");
  if (hide_index == 0) hide_index = pf.n;
  auto f = numeric_polynomials<T>(*pf.polynomials);
  auto r = hidden_variable_resultant(pf.supports, f, hide_index, effective_seed(a, pf));
  Json terms = Json::array();
  for (const auto& [e, c] : r.terms)
    terms.push_back(Json::array({e[0].template convert_to<long long>(), cnum(c)}));
  Json out;
  out["hide_index"] = hide_index;
  out["terms"] = terms;
  std::vector<std::string> text;
  text.push_back("hidden-variable resultant in t_" + std::to_string(hide_index) +
                 " (up to scale), " + std::to_string(r.terms.size()) + " terms:");
  for (const auto& [e, c] : r.terms)
    text.push_back("  exponent " + e[0].str() + ": " + Json(cnum(c)).dump());
  emit(out, text, a.json);
  return 0;
}

int cmd_reconstruct(const CommonArgs& a) {
  auto pf = load_problem(a.input);
  int bits = effective_precision(a, pf, 256);
  auto fam = pf.family();
  auto p = reconstruct(fam, bits, effective_seed(a, pf));
  auto hb = verify_height_bound(p, fam);
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) terms.push_back(Json::array({ivec(e), c.str()}));
  Json out;
  Json degs = Json::array();
  for (const auto& d : p.multidegree) degs.push_back(d.convert_to<long long>());
  out["multidegree"] = degs;
  out["block_sizes"] = p.block_sizes;
  out["terms"] = terms;
  out["text"] = p.to_text();
  out["height"] = hb.height;
  out["height_bound"] = hb.bound;
  out["height_ok"] = hb.ok;
  std::vector<std::string> text;
  text.push_back("Res (up to sign) = " + p.to_text());
  text.push_back("height " + std::to_string(hb.height) + " <= bound " +
                 std::to_string(hb.bound) + (hb.ok ? " (ok)" : " (VIOLATED)"));
  emit(out, text, a.json);
  return 0;
}

int cmd_mv(const CommonArgs& a) {
  auto pf = load_problem(a.input);
  if (pf.supports.size() != pf.n)
    throw InputError("'mv' needs n supports in n variables");
  Int b = bernstein_number(pf.supports);
  Json out;
  out["mixed_volume"] = b.convert_to<long long>();
  emit(out, {b.str()}, a.json);
  return 0;
}

// smoke tests over the shipped fixture corpus
int cmd_selftest(const std::string& fixtures, bool json) {
  int failures = 0;
  std::vector<std::string> lines;
  auto check = [&](const std::string& name, bool ok) {
    lines.push_back(std::string(ok ? "ok   - " : "FAIL - ") + name);
    if (!ok) ++failures;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      check(name, body());
    } catch (const std::exception& e) {
      check(name + " (" + e.what() + ")", false);
    }
  };

  guarded("example1: d_A = 2 and |Res| = |u00|^2", [&] {
    auto pf = load_problem(fixtures + "/example1.json");
    auto rep = analyze(pf.family());
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto rv = eval_sparse_resultant(pf.family(), f, pf.options.seed);
    double u00 = abs(f[0].coefficient({0}));
    return rep.exponent_dA == 2 && std::abs(abs(rv.value) - u00 * u00) < 1e-8;
  });
  guarded("example2: degrees (2,2,1) and |Res| = 3 at all-ones", [&] {
    auto pf = load_problem(fixtures + "/example2.json");
    auto rep = analyze(pf.family());
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto rv = eval_sparse_resultant(pf.family(), f, pf.options.seed);
    return rep.degrees == std::vector<Int>{2, 2, 1} && std::abs(abs(rv.value) - 3) < 1e-8;
  });
  guarded("example2: exact reconstruction has 3 unit terms", [&] {
    auto pf = load_problem(fixtures + "/example2.json");
    auto p = reconstruct(pf.family(), 256, pf.options.seed);
    bool units = true;
    for (const auto& [e, c] : p.terms) units = units && c == 1;
    return p.terms.size() == 3 && units;
  });
  guarded("example3: additive-support instance evaluates and is nonzero", [&] {
    auto pf = load_problem(fixtures + "/example3.json");
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto rv = eval_sparse_resultant(pf.family(), f, pf.options.seed);
    return abs(rv.value) > 1e-8;
  });
  guarded("example4: degrees (3,3,1), tail mixed volume 3, nonzero Res", [&] {
    auto pf = load_problem(fixtures + "/example4.json");
    auto rep = analyze(pf.family());
    Int b = bernstein_number({pf.supports[1], pf.supports[2]});
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto rv = eval_sparse_resultant(pf.family(), f, pf.options.seed);
    return rep.degrees == std::vector<Int>{3, 3, 1} && b == 3 && abs(rv.value) > 1e-8;
  });
  guarded("example5: singleton support gives |Res| = |u0|^d_A", [&] {
    auto pf = load_problem(fixtures + "/example5.json");
    auto rep = analyze(pf.family());
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto rv = eval_sparse_resultant(pf.family(), f, pf.options.seed);
    double u0 = abs(f[0].terms.begin()->second);
    double expected = std::pow(u0, rep.exponent_dA.convert_to<double>());
    return std::abs(abs(rv.value) - expected) < 1e-8 * (1 + expected);
  });
  guarded("solve_simple: two roots with small residual", [&] {
    auto pf = load_problem(fixtures + "/solve_simple.json");
    auto f = numeric_polynomials<double>(*pf.polynomials);
    auto r = solve_square_system(f, pf.options.seed);
    return r.roots.size() == 2 && r.residual < 1e-8;
  });

  std::string summary = std::to_string(lines.size() - failures) + "/" +
                        std::to_string(lines.size()) + " checks passed";
  if (json) {
    Json out;
    out["checks"] = lines;
    out["failures"] = failures;
    out["summary"] = summary;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << summary << "\n";
  }
  return failures == 0 ? 0 : 3;
}

template <typename Fn>
int with_precision(const CommonArgs& a, const ProblemFile& pf, Fn&& fn) {
  int bits = effective_precision(a, pf, 53);
  if (bits <= 0 || bits > 256) throw InputError("precision must be between 1 and 256 bits");
  if (bits <= 53) return fn.template operator()<double>();
  return fn.template operator()<BigFloat>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse elimination toolkit: analysis, resultant evaluation, solving"};
  app.require_subcommand(1);

  CommonArgs analyze_args, eval_args, solve_args, hide_args, rec_args, mv_args;
  std::size_t hide_index = 0;
  std::string fixtures = "fixtures";
  bool selftest_json = false;

  add_common(app.add_subcommand("analyze", "combinatorial analysis of a support family"),
             analyze_args);
  add_common(app.add_subcommand("eval", "evaluate the sparse resultant numerically"), eval_args);
  add_common(app.add_subcommand("solve", "solve a square Laurent system on the torus"),
             solve_args);
  auto* hide_cmd =
      app.add_subcommand("hide", "hidden-variable resultant of a square system");
  add_common(hide_cmd, hide_args);
  hide_cmd->add_option("--hide-index", hide_index, "1-based variable to hide (default: last)");
  add_common(app.add_subcommand("reconstruct", "exact integer resultant of a tiny family"),
             rec_args);
  add_common(app.add_subcommand("mv", "mixed volume of the supports"), mv_args);
  auto* selftest_cmd = app.add_subcommand("selftest", "run the fixture corpus");
  selftest_cmd->add_option("--fixtures", fixtures, "fixture directory");
  selftest_cmd->add_flag("--json", selftest_json, "machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("analyze")) return cmd_analyze(analyze_args);
    if (app.got_subcommand("eval")) {
      auto pf = load_problem(eval_args.input);
      return with_precision(eval_args, pf, [&]<typename T>() { return run_eval<T>(eval_args, pf); });
    }
    if (app.got_subcommand("solve")) {
      auto pf = load_problem(solve_args.input);
      return with_precision(solve_args, pf,
                            [&]<typename T>() { return run_solve<T>(solve_args, pf); });
    }
    if (app.got_subcommand("hide")) {
      auto pf = load_problem(hide_args.input);
      return with_precision(hide_args, pf,
                            [&]<typename T>() { return run_hide<T>(hide_args, pf, hide_index); });
    }
    if (app.got_subcommand("reconstruct")) return cmd_reconstruct(rec_args);
    if (app.got_subcommand("mv")) return cmd_mv(mv_args);
    if (app.got_subcommand("selftest")) return cmd_selftest(fixtures, selftest_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
