// Acceptance checks: one PASS/FAIL line per criterion.
//
//   acceptance <signumcalc-cli> <golden prop35.md>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fuzz.hpp"
#include "oracle.hpp"
#include "parser.hpp"
#include "quadrature.hpp"
#include "report.hpp"

using namespace signumcalc;

namespace {

const DimScalar m = DimScalar::m();
DimScalar mp(long c) { return DimScalar::m_plus(c); }

struct Result {
  bool pass = true;
  std::string detail;
};

struct Tally {
  unsigned checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  void suite(const std::string& name, const VerifyConfig& cfg) {
    SuiteReport r = run_suite(name, cfg);
    for (const auto& e : r.entries) expect(e.pass, name + "/" + e.id + ": " + e.detail);
  }
  Result result() const {
    if (!first_failure.empty()) return {false, first_failure};
    return {true, std::to_string(checks) + " checks"};
  }
};

GeneralizedFunction D(unsigned n, const DimScalar& c = DimScalar(1)) { return dirac_basis(n, c); }

std::string cli_path, golden_path;

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int raw = pclose(p);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Result criterion1() {
  Tally t;
  t.expect(evaluate("dr^2 delta") == D(2, -mp(1) / DimScalar(2)), "dr^2 delta = (m+1)/2 L delta");
  t.expect(evaluate("inv_r_dr delta") == D(2, DimScalar(1) / DimScalar(2)), "inv_r_dr delta = -1/2 L delta");
  Distribution lhs = apply_dr2(delta()) + apply_inv_r_dr(delta()) * mp(-1);
  t.expect(lhs == apply_laplace(delta()), "(dr^2 + (m-1) inv_r_dr) delta = L delta");
  t.suite("prop31", VerifyConfig{});
  return t.result();
}

Result criterion2() {
  Tally t;
  Distribution cur = delta();
  for (unsigned n = 1; n <= 12; ++n) {
    cur = apply_omega_dr(cur);
    t.expect(cur == dirac_basis(n, odd_rising_coeff(n / 2)), "(w dr)^" + std::to_string(n) + " delta");
  }
  for (unsigned k = 0; k <= 6; ++k)
    t.expect(odd_rising_coeff(k) == m_product(1, 2, k) / DimScalar(power_of_two(k) * factorial(k)),
             "A_" + std::to_string(k));
  VerifyConfig cfg;
  t.suite("prop32", cfg);
  t.suite("cor33", cfg);
  return t.result();
}

Result criterion3() {
  Tally t;
  Distribution cur = delta();
  for (unsigned k = 1; k <= 6; ++k) {
    cur = apply_inv_r_dr(cur);
    t.expect(cur == dirac_basis(2 * k, DimScalar(Rational(1) / (power_of_two(k) * factorial(k)))),
             "(inv_r_dr)^" + std::to_string(k) + " delta");
  }
  t.suite("cor34", VerifyConfig{});
  return t.result();
}

Result criterion4() {
  Tally t;
  for (auto f : {Prop35Family::I, Prop35Family::II, Prop35Family::III, Prop35Family::IV})
    for (unsigned k = 0; k <= 4; ++k)
      for (unsigned l = 0; l <= k; ++l)
        t.expect(prop35_coefficient(f, k, l).as_distribution() == prop35_composed(f, k, l),
                 std::string("family ") + to_string(f) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
  t.suite("prop35", VerifyConfig{});

  std::ifstream in(golden_path);
  std::stringstream golden;
  golden << in.rdbuf();
  int status = 0;
  std::string out = run_capture("'" + cli_path + "' table --family prop35 --kmax 4 --lmax 4", status);
  t.expect(in.good() || !golden.str().empty(), "golden file readable");
  t.expect(status == 0 && out == golden.str(), "table --family prop35 matches golden file");
  return t.result();
}

Result criterion5() {
  Tally t;
  auto same = [&](const char* expr, const GeneralizedFunction& want) {
    t.expect(evaluate(expr) == want, expr);
  };
  same("r delta", GeneralizedFunction::zero(Space::Sign));
  same("r D delta", evaluate("-m * w delta"));
  same("r L delta", evaluate("-2 * dr delta"));
  same("r dr^2 delta", evaluate("-(m+1) * dr delta"));
  same("inv_r delta", evaluate("-(1/m) * dr delta"));
  same("inv_r^3 delta", act_dr(apply_dr2(delta())) * (DimScalar(-1) / m_product(0, 1, 3)));
  same("inv_x delta", D(1, DimScalar(1) / m));
  t.suite("examples_sec7", VerifyConfig{});
  return t.result();
}

Result criterion6() {
  Tally t;
  VerifyConfig cfg;  // kmax 4 covers basis indices 0..9
  t.suite("remark_compositions", cfg);
  t.suite("properties_sec8", cfg);
  t.suite("identities_x", cfg);
  return t.result();
}

Result criterion7() {
  Tally t;
  VerifyConfig cfg;
  cfg.dims = {2, 3, 4, 5};
  Verifier v(cfg);
  for (long dim : cfg.dims)
    for (unsigned trial = 0; trial < cfg.trials; ++trial)
      for (unsigned n = 0; n <= 10; ++n)
        t.expect(v.basis_pairing(dim, trial, n, Route::Cartesian) == v.basis_pairing(dim, trial, n, Route::Spherical),
                 "n=" + std::to_string(n) + " m=" + std::to_string(dim) + " trial=" + std::to_string(trial));
  MultiPoly x1sq = parse_poly("x1^2", 3);
  t.expect(pair_cartesian(dirac_basis(2), x1sq) == PairingValue::scalar(-2), "cartesian <D^2 delta, x1^2> = -2");
  t.expect(pair_spherical(dirac_basis(2), x1sq) == PairingValue::scalar(-2), "spherical <D^2 delta, x1^2> = -2");
  return t.result();
}

Result criterion8() {
  Tally t;
  VerifyConfig cfg;
  for (long dim : {2L, 3L, 5L})
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
      MultiPoly phi = trial_poly(cfg, dim, trial);
      RadialPoly s0 = spherical_mean0(phi);
      for (unsigned l = 0; l <= 3; ++l) {
        PairingValue lhs = pair(radial(RadialLabel::D, 2 * l), phi, Route::Cartesian);
        PairingValue rhs = radial_deriv_at_zero(s0, 2 * l) * physics_constant(2 * l, dim);
        t.expect(lhs == rhs, "l=" + std::to_string(l) + " m=" + std::to_string(dim));
      }
    }
  t.suite("physics_sec5", cfg);
  return t.result();
}

Result criterion9() {
  double e2 = quad::max_moment_error(2), e3 = quad::max_moment_error(3);
  std::ostringstream os;
  os << "max error m=2 " << e2 << " (tol 1e-12), m=3 " << e3 << " (tol 1e-10)";
  return {e2 <= 1e-12 && e3 <= 1e-10, os.str()};
}

Result criterion10() {
  Tally t;
  VerifyConfig cfg;
  SuiteReport r = run_suite("properties_sec8", cfg);
  for (const auto& e : r.entries)
    if (e.id.rfind("transition_", 0) == 0) t.expect(e.pass, e.id + ": " + e.detail);
  for (const char* kind : {"transition_r_dist", "transition_r_sign", "transition_dr_dist", "transition_dr_sign",
                           "transition_omega_dist", "transition_omega_sign"}) {
    bool seen = false;
    for (const auto& e : r.entries) seen = seen || e.id.rfind(kind, 0) == 0;
    t.expect(seen, std::string("rule family ") + kind + " present");
  }
  return t.result();
}

Result criterion11() {
  fuzz::Outcome o = fuzz::run(10000, 0);
  int status = 0;
  run_capture("'" + cli_path + "' verify --all", status);
  std::ostringstream os;
  os << "fuzz: " << o.parsed << " parsed, " << o.rejected << " ParseError, " << o.other
     << " other; verify --all exit " << status;
  return {o.other == 0 && status == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <signumcalc-cli> <golden prop35.md>\n";
    return 2;
  }
  cli_path = argv[1];
  golden_path = argv[2];

  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"second radial derivative and (1/r)dr of delta", criterion1},
      {"powers of w dr on delta, closed forms for n <= 12", criterion2},
      {"powers of (1/r)dr on delta for k <= 6", criterion3},
      {"r^a dr^b coefficient table and golden file", criterion4},
      {"worked examples: r, 1/r, 1/r^3 and 1/x on delta", criterion5},
      {"two-step r/dr/w compositions for n <= 9", criterion6},
      {"cartesian and spherical pairings agree exactly", criterion7},
      {"physics form of the even radial derivatives", criterion8},
      {"sphere moments against numeric quadrature", criterion9},
      {"signum transition rules pair consistently", criterion10},
      {"parser fuzz and verify --all", criterion11},
  };

  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::printf("criterion %2d: %s  %s [%s]\n", index, r.pass ? "PASS" : "FAIL", name, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/11 criteria pass\n", 11 - failed);
  return failed ? 1 : 0;
}
