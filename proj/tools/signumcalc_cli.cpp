#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signumcalc/signumcalc.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3 };

struct StrDeleter {
  void operator()(char* s) const { sc_string_free(s); }
};
struct GfunDeleter {
  void operator()(sc_gfun* g) const { sc_gfun_free(g); }
};
struct PolyDeleter {
  void operator()(sc_poly* p) const { sc_poly_free(p); }
};
struct ReportDeleter {
  void operator()(sc_report* r) const { sc_report_free(r); }
};
using Str = std::unique_ptr<char, StrDeleter>;
using Gfun = std::unique_ptr<sc_gfun, GfunDeleter>;
using Poly = std::unique_ptr<sc_poly, PolyDeleter>;
using Report = std::unique_ptr<sc_report, ReportDeleter>;

struct Failure {
  int code;
};

int exit_for(sc_status s) {
  switch (s) {
    case SC_OK: return kOk;
    case SC_ERR_UNSUPPORTED:
    case SC_ERR_DOMAIN:
    case SC_ERR_DIV_ZERO:
    case SC_ERR_POLE:
    case SC_ERR_KIND_MISMATCH: return kUnsupported;
    case SC_ERR_INTERNAL: return kFailed;
    default: return kUsage;
  }
}

void check(sc_status s, const std::string& input = {}) {
  if (s == SC_OK) return;
  std::cerr << "error: " << sc_status_name(s) << ": " << sc_last_error() << '\n';
  size_t off = sc_last_error_offset();
  if (off != SIZE_MAX && !input.empty() && off <= input.size())
    std::cerr << "  " << input << "\n  " << std::string(off, ' ') << "^\n";
  throw Failure{exit_for(s)};
}

Str take(char* s) { return Str(s); }

Gfun parse_expr(const std::string& text) {
  sc_gfun* g = nullptr;
  check(sc_gfun_parse(text.c_str(), &g), text);
  return Gfun(g);
}

std::optional<uint64_t> seed_from_env() {
  const char* env = std::getenv("SIGNUMCALC_SEED");
  if (!env || !*env) return std::nullopt;
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    std::cerr << "error: SIGNUMCALC_SEED is not a non-negative integer: " << env << '\n';
    throw Failure{kUsage};
  }
}

sc_format format_of(const std::string& name) {
  if (name == "json") return SC_FORMAT_JSON;
  if (name == "md" || name == "markdown") return SC_FORMAT_MARKDOWN;
  return SC_FORMAT_TEXT;
}

int run_normalize(const std::string& expr, std::optional<long> m, bool basis) {
  Gfun g = parse_expr(expr);
  if (m) {
    sc_gfun* s = nullptr;
    check(sc_gfun_specialize(g.get(), *m, &s));
    g.reset(s);
  }
  char* out = nullptr;
  check(sc_gfun_print(g.get(), SC_PRINT_CANONICAL, &out));
  Str canonical = take(out);
  std::cout << canonical.get() << '\n';
  sc_space space;
  check(sc_gfun_space(g.get(), &space));
  if (space == SC_SPACE_SIGN || basis) {
    check(sc_gfun_print(g.get(), SC_PRINT_BASIS, &out));
    Str b = take(out);
    if (std::string(b.get()) != canonical.get()) std::cout << "= " << b.get() << '\n';
  }
  return kOk;
}

int run_pair(const std::string& expr, const std::string& poly, long m, const std::string& route) {
  Gfun g = parse_expr(expr);
  sc_poly* p = nullptr;
  check(sc_poly_parse(poly.c_str(), static_cast<unsigned>(m), &p), poly);
  Poly phi(p);
  sc_gfun* s = nullptr;
  check(sc_gfun_specialize(g.get(), m, &s));
  g.reset(s);
  if (route == "both") {
    char* c = nullptr;
    char* sp = nullptr;
    int agree = 0;
    check(sc_pair_both(g.get(), phi.get(), &c, &sp, &agree));
    Str cs = take(c), ss = take(sp);
    std::cout << cs.get() << " | " << ss.get() << (agree ? " (agree)" : " (DISAGREE)") << '\n';
    return agree ? kOk : kFailed;
  }
  char* out = nullptr;
  check(sc_pair(g.get(), phi.get(), route == "spherical" ? SC_ROUTE_SPHERICAL : SC_ROUTE_CARTESIAN, &out));
  std::cout << take(out).get() << '\n';
  return kOk;
}

int run_verify(const std::string& suite, unsigned kmax, const std::vector<long>& dims, uint64_t seed,
               unsigned trials, const std::string& format) {
  sc_verify_config cfg;
  sc_verify_config_default(&cfg);
  cfg.kmax = kmax;
  if (!dims.empty()) {
    cfg.dims = dims.data();
    cfg.n_dims = dims.size();
  }
  cfg.seed = seed;
  cfg.trials = trials;
  sc_report* r = nullptr;
  check(sc_verify_run(suite.empty() ? nullptr : suite.c_str(), &cfg, &r));
  Report report(r);
  char* out = nullptr;
  check(sc_report_render(report.get(), format_of(format), &out));
  std::cout << take(out).get();
  return sc_report_all_pass(report.get()) ? kOk : kFailed;
}

int run_table(unsigned kmax, unsigned lmax, const std::string& format) {
  char* out = nullptr;
  check(sc_table_prop35(kmax, lmax, format_of(format), &out));
  std::cout << take(out).get();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signumcalc: radial operators on delta and signumdistributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sc_version()));

  auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an expression");
  std::string n_expr;
  std::optional<long> n_m;
  bool n_basis = false;
  normalize->add_option("expr", n_expr, "Expression, e.g. \"dr^2 delta\"")->required();
  normalize->add_option("--m", n_m, "Specialize to a fixed dimension")->check(CLI::Range(2L, 1L << 20));
  normalize->add_flag("--basis", n_basis, "Also print the s[n] / D^n basis form");

  auto* pair = app.add_subcommand("pair", "Pair an expression with a polynomial test function");
  std::string p_expr, p_poly, p_route = "cartesian";
  long p_m = 0;
  pair->add_option("expr", p_expr, "Expression")->required();
  pair->add_option("poly", p_poly, "Polynomial in x1..xm, e.g. \"3*x1^2*x2 - 1/2*x3\"")->required();
  pair->add_option("--m", p_m, "Dimension")->required()->check(CLI::Range(2L, 64L));
  pair->add_option("--route", p_route, "Oracle route")
      ->check(CLI::IsMember({"cartesian", "spherical", "both"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string v_suite, v_format = "json";
  bool v_all = false;
  unsigned v_kmax = 4, v_trials = 25;
  std::vector<long> v_dims;
  std::optional<uint64_t> v_seed;
  std::vector<std::string> suites;
  for (size_t i = 0; i < sc_suite_count(); ++i) suites.emplace_back(sc_suite_name(i));
  auto* suite_opt = verify->add_option("--suite", v_suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_flag("--all", v_all, "Run every suite (default)")->excludes(suite_opt);
  verify->add_option("--kmax", v_kmax, "Order bound")->check(CLI::Range(0u, 32u));
  verify->add_option("--m-list", v_dims, "Dimensions")->delimiter(',')->check(CLI::Range(2L, 64L));
  verify->add_option("--seed", v_seed, "Random seed (overrides SIGNUMCALC_SEED)");
  verify->add_option("--trials", v_trials, "Random polynomials per check")->check(CLI::Range(1u, 10000u));
  verify->add_option("--format", v_format, "Output format")->check(CLI::IsMember({"json", "md", "text"}));

  auto* table = app.add_subcommand("table", "Emit coefficient tables");
  std::string t_family = "prop35", t_format = "md";
  unsigned t_kmax = 4, t_lmax = 4;
  table->add_option("--family", t_family, "Table family")->check(CLI::IsMember({"prop35"}));
  table->add_option("--kmax", t_kmax, "Largest k")->check(CLI::Range(0u, 64u));
  table->add_option("--lmax", t_lmax, "Largest l")->check(CLI::Range(0u, 64u));
  table->add_option("--format", t_format, "Output format")->check(CLI::IsMember({"md", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize) return run_normalize(n_expr, n_m, n_basis);
    if (*pair) return run_pair(p_expr, p_poly, p_m, p_route);
    if (*verify) {
      uint64_t seed = v_seed ? *v_seed : seed_from_env().value_or(0);
      return run_verify(v_suite, v_kmax, v_dims, seed, v_trials, v_format);
    }
    if (*table) return run_table(t_kmax, t_lmax, t_format);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
