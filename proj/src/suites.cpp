#include <algorithm>
#include <cstdio>
#include <future>

#include "oracle.hpp"
#include "parser.hpp"

namespace signumcalc {

namespace {

using G = GeneralizedFunction;

std::string idx(const char* prefix, unsigned n) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02u", n);
  return std::string(prefix) + buf;
}

std::string kl(unsigned k, unsigned l) { return idx("_k", k) + idx("_l", l); }

DimScalar mp(long c) { return DimScalar::m_plus(c); }

Rational rsign(unsigned k) { return Rational(k % 2 == 0 ? 1 : -1); }
DimScalar dsign(unsigned k) { return DimScalar(k % 2 == 0 ? 1 : -1); }

// (m+1)(m+3)...(m+2k-1)/(2^k k!), built factor by factor.
DimScalar a_coeff(unsigned k) {
  DimScalar a(1);
  for (unsigned j = 1; j <= k; ++j) a = a * mp(2 * j - 1) / DimScalar(static_cast<long>(2 * j));
  return a;
}

// c(c-2)...(c-2(count-1)) as an integer.
DimScalar even_falling(long c, unsigned count) {
  DimScalar p(1);
  for (unsigned j = 0; j < count; ++j) p *= DimScalar(c - 2 * static_cast<long>(j));
  return p;
}

// (m+c)(m+c-2)... with count factors.
DimScalar m_falling(long c, unsigned count) {
  DimScalar p(1);
  for (unsigned j = 0; j < count; ++j) p *= mp(c - 2 * static_cast<long>(j));
  return p;
}

G D(unsigned n, const DimScalar& c = DimScalar(1)) { return dirac_basis(n, c); }
G S(unsigned n, const DimScalar& c = DimScalar(1)) { return signum_basis(n, c); }
G delta_g() { return delta(); }

G dr_pow(unsigned n) { return apply(Operator::Dr, delta_g(), n); }
G w(const G& g) { return apply(Operator::Omega, g); }
G r(const G& g) { return apply(Operator::R, g); }

// The signumdistribution carrying the same coefficients, s[n] for D^n delta.
G as_signum(const G& t) {
  SignumDistribution s;
  for (const auto& [n, c] : t.dist().terms()) s.add_term(n, c);
  return s;
}

G as_dist(const G& s) {
  Distribution t;
  for (const auto& [n, c] : s.sign().terms()) t.add_term(n, c);
  return t;
}

struct Suite {
  Verifier& v;
  SuiteReport report;

  void id(const std::string& name, const G& lhs, const G& rhs) { report.entries.push_back(v.identity(name, lhs, rhs)); }
  void pairing(const std::string& name, const std::string& lt, const std::string& rt, const Verifier::PairingFn& l,
               const Verifier::PairingFn& r) {
    report.entries.push_back(v.pairing(name, lt, rt, l, r));
  }
  unsigned k() const { return v.config().kmax; }
  unsigned nmax() const { return 2 * k() + 1; }
};

// ---------------------------------------------------------------- suites

void prop31(Suite& s) {
  const G lap = apply(Operator::Laplace, delta_g());
  s.id("dr2_delta", dr_pow(2), lap * (mp(1) / DimScalar(2)));
  s.id("inv_r_dr_delta", apply(Operator::InvRDr, delta_g()), lap * DimScalar(Rational(-1) / Rational(2)));
  s.id("laplace_spherical_form", dr_pow(2) + apply(Operator::InvRDr, delta_g()) * mp(-1), lap);
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    const Distribution t = dirac_basis(n);
    s.id(idx("dr2_vs_omega_dr_squared_n", n), apply_dr2(t), -apply_omega_dr(apply_omega_dr(t)));
    if (n % 2 == 0)
      s.id(idx("laplace_spherical_form_n", n), apply_dr2(t) + apply_inv_r_dr(t) * mp(-1), apply_laplace(t));
  }
}

void prop32(Suite& s) {
  const G dirac = D(1);
  s.id("omega_dr_delta", apply_omega_dr(delta()), dirac);
  s.id("omega_dr_delta_transitions", act_omega(act_dr(delta_g())), dirac);
  s.id("dr_omega_delta_transitions", act_dr(act_omega(delta_g())), dirac);
  s.id("omega_dr_delta_parsed", w(dr_pow(1)), dirac);
  s.pairing(
      "omega_dr_delta_componentwise", "<(w dr) delta, phi>", "-grad phi(0)",
      [](const MultiPoly& phi) { return pair_cartesian(apply_omega_dr(delta()), phi); },
      [](const MultiPoly& phi) {
        std::vector<Rational> g;
        for (const auto& c : dirac_apply(phi)) g.push_back(-c.value_at_zero());
        return PairingValue::vector(std::move(g));
      });
}

void cor33(Suite& s) {
  Distribution classical = delta();
  G transitions = delta_g();
  for (unsigned n = 0; n <= 3 * s.k(); ++n) {
    const unsigned k = n / 2;
    const G closed = D(n, a_coeff(k));
    s.id(idx("omega_dr_pow_n", n), classical, closed);
    s.id(idx("omega_dr_pow_transitions_n", n), transitions, closed);
    const G radial_form = n % 2 == 0 ? dr_pow(n) : w(dr_pow(n));
    s.id(idx("radial_derivative_n", n), radial_form * dsign(k), closed);
    classical = apply_omega_dr(classical);
    transitions = act_omega(act_dr(transitions));
  }
  for (unsigned k = 0; k <= s.k(); ++k) {
    const Distribution even = dirac_basis(2 * k);
    const Distribution odd = dirac_basis(2 * k + 1);
    const Distribution first = apply_omega_dr(delta());
    s.id(idx("omega_dr_on_even_k", k), apply_omega_dr(even), D(2 * k + 1));
    s.id(idx("omega_dr_on_even_commutes_k", k), apply_omega_dr(even),
         apply(Operator::Dirac, first, 2 * k));
    const DimScalar ratio = mp(2 * k + 1) / DimScalar(static_cast<long>(2 * (k + 1)));
    s.id(idx("omega_dr_on_odd_k", k), apply_omega_dr(odd), D(2 * k + 2, ratio));
    s.id(idx("omega_dr_on_odd_commutes_k", k), apply_omega_dr(odd),
         apply(Operator::Dirac, first, 2 * k + 1) * ratio);
  }
}

void cor34(Suite& s) {
  for (unsigned k = 0; k <= s.k() + 2; ++k) {
    const G lhs = apply(Operator::InvRDr, delta_g(), k);
    const Rational norm = Rational(1) / (power_of_two(k) * factorial(k));
    s.id(idx("inv_r_dr_pow_k", k), lhs, D(2 * k, norm));
    s.id(idx("inv_r_dr_pow_laplace_k", k), lhs, apply(Operator::Laplace, delta_g(), k) * DimScalar(norm * rsign(k)));
  }
}

void identities_x(Suite& s) {
  for (unsigned k = 0; k <= s.k(); ++k) {
    for (unsigned l = 0; l <= k; ++l) {
      const long tk = 2 * static_cast<long>(k);
      const std::string tag = kl(k, l);
      const G d_even = D(2 * k), d_odd = D(2 * k + 1);
      s.id("x_pow_i" + tag, apply(Operator::X, d_even, 2 * l),
           D(2 * (k - l), even_falling(tk, l) * m_falling(tk - 2, l)));
      const DimScalar c2 = even_falling(tk, l + 1) * m_falling(tk - 2, l);
      s.id("x_pow_ii" + tag, apply(Operator::X, d_even, 2 * l + 1),
           k > l ? D(2 * (k - l) - 1, c2) : G(Distribution{}));
      s.id("x_pow_iii" + tag, apply(Operator::X, d_odd, 2 * l),
           D(2 * (k - l) + 1, even_falling(tk, l) * m_falling(tk, l)));
      s.id("x_pow_iv" + tag, apply(Operator::X, d_odd, 2 * l + 1),
           D(2 * (k - l), even_falling(tk, l) * m_falling(tk, l + 1)));
    }
  }
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    const Distribution t = dirac_basis(n);
    s.pairing(
        idx("clifford_x_n", n), "<x D^" + std::to_string(n) + " delta, phi> (Clifford)",
        print_canonical(mul_x(t)),
        [t](const MultiPoly& phi) { return pair_mul_x(t, phi); },
        [t](const MultiPoly& phi) { return pair_cartesian(mul_x(t), phi); });
    s.id(idx("x_inv_x_n", n), mul_x(div_x(t)), t);
    if (n % 2 == 0) s.id(idx("gamma_n", n), apply(Operator::Gamma, t), Distribution{});
  }
}

void prop35(Suite& s) {
  for (auto f : {Prop35Family::I, Prop35Family::II, Prop35Family::III, Prop35Family::IV})
    for (unsigned k = 0; k <= s.k(); ++k)
      for (unsigned l = 0; l <= k; ++l)
        s.id(std::string(to_string(f)) + kl(k, l),
             prop35_composed(f, k, l), prop35_coefficient(f, k, l).as_distribution());
}

void examples_sec7(Suite& s) {
  const G d = delta_g();
  s.id("r_delta", r(d), G::zero(Space::Sign));
  s.id("r_dirac_delta", r(D(1)), act_omega(d) * -DimScalar::m());
  s.id("r_laplace_delta", r(apply(Operator::Laplace, d)), dr_pow(1) * DimScalar(-2));
  s.id("r_dr2_delta", r(dr_pow(2)), dr_pow(1) * -mp(1));
  s.id("r_inv_r_dr_delta", r(apply(Operator::InvRDr, d)), dr_pow(1));
  s.id("inv_r_delta", apply(Operator::InvR, d), dr_pow(1) * -(DimScalar(1) / DimScalar::m()));
  s.id("inv_r3_delta", apply(Operator::InvR, d, 3), dr_pow(3) * -(DimScalar(1) / m_product(0, 1, 3)));
  s.id("inv_x_delta", apply(Operator::InvX, d), D(1, DimScalar(1) / DimScalar::m()));
  for (unsigned k = 0; k <= s.k(); ++k) {
    const unsigned p = 2 * k + 1;
    const G lhs = apply(Operator::InvR, d, p);
    // (m-1)!/(m+2k)! = 1/(m(m+1)...(m+2k))
    s.id(idx("inv_r_pow_k", k), lhs, dr_pow(p) * -(DimScalar(1) / m_product(0, 1, p)));
    G inv_x = d;
    for (unsigned i = 0; i < p; ++i) inv_x = apply(Operator::InvX, inv_x);
    s.pairing(
        idx("inv_r_pow_definition_k", k), "<1/r^" + std::to_string(p) + " delta, w phi>",
        "(-1)^(k+1) <x^-" + std::to_string(p) + " delta, phi>",
        [lhs](const MultiPoly& phi) { return pair(lhs, phi, Route::Spherical); },
        [inv_x, k](const MultiPoly& phi) { return pair(inv_x, phi) * rsign(k + 1); });
    s.id(idx("inv_r_even_k", k), apply(Operator::InvR, dr_pow(2 * k)), dr_pow(2 * k + 1) * -(DimScalar(1) / mp(2 * k)));
    s.id(idx("inv_r_odd_k", k), apply(Operator::InvR, w(dr_pow(2 * k + 1))),
         w(dr_pow(2 * k + 2)) * -(DimScalar(1) / mp(2 * k + 1)));
  }
}

void properties_sec8(Suite& s) {
  for (unsigned k = 0; k <= s.k(); ++k) {
    const G dr_even = dr_pow(2 * k), dr_odd = dr_pow(2 * k + 1);  // distribution / signumdistribution
    const G v_odd = w(dr_odd);                                       // (w dr^{2k+1}) delta
    const G sv_even = w(dr_even);                                    // w dr^{2k} delta
    // distributions -> signumdistributions
    s.id(idx("p1_r_omega_dr_odd_k", k), r(v_odd), sv_even * -mp(2 * k));
    if (k > 0) s.id(idx("p1_r_dr_even_k", k), r(dr_even), dr_pow(2 * k - 1) * -mp(2 * k - 1));
    s.id(idx("p1_dr_omega_dr_odd_k", k), apply(Operator::Dr, v_odd), w(dr_pow(2 * k + 2)));
    s.id(idx("p1_dr_dr_even_k", k), apply(Operator::Dr, dr_even), dr_odd);
    // signumdistributions -> distributions
    s.id(idx("p2_r_dr_odd_k", k), r(dr_odd), dr_even * -mp(2 * k));
    if (k > 0) s.id(idx("p2_r_omega_dr_even_k", k), r(sv_even), w(dr_pow(2 * k - 1)) * -mp(2 * k - 1));
    s.id(idx("p2_r_inv_r_even_k", k), r(apply(Operator::InvR, dr_even)), dr_even);
    s.id(idx("p2_r_inv_r_odd_k", k), r(apply(Operator::InvR, v_odd)), v_odd);
    s.id(idx("p2_dr_dr_odd_k", k), apply(Operator::Dr, dr_odd), dr_pow(2 * k + 2));
    s.id(idx("p2_dr_omega_dr_even_k", k), apply(Operator::Dr, sv_even), v_odd);
    s.id(idx("p2_omega_omega_dr_even_k", k), w(sv_even), dr_even * DimScalar(-1));
    s.id(idx("p2_omega_dr_odd_k", k), w(dr_odd), v_odd);
  }
  // Transition rules against the defining pairings, both directions.
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    const Distribution t = dirac_basis(n);
    const SignumDistribution sg = signum_basis(n);
    const std::string tn = "D^" + std::to_string(n) + " delta";
    const std::string sn = "s[" + std::to_string(n) + "]";
    s.pairing(
        idx("transition_r_dist_n", n), "<r " + tn + ", w phi>", "<x " + tn + ", phi>",
        [t](const MultiPoly& phi) { return pair(act_r(t), phi, Route::Spherical); },
        [t](const MultiPoly& phi) { return pair_mul_x(t, phi); });
    s.pairing(
        idx("transition_dr_dist_n", n), "<dr " + tn + ", w phi>", "<(w dr) " + tn + ", phi>",
        [t](const MultiPoly& phi) { return pair(act_dr(t), phi, Route::Spherical); },
        [t](const MultiPoly& phi) { return pair_cartesian(apply_omega_dr(t), phi); });
    s.pairing(
        idx("transition_omega_dist_n", n), "<w " + tn + ", w phi>", "-<" + tn + ", phi>",
        [t](const MultiPoly& phi) { return pair(act_omega(t), phi, Route::Spherical); },
        [t](const MultiPoly& phi) { return pair_cartesian(t, phi) * Rational(-1); });
    s.pairing(
        idx("transition_r_sign_n", n), "<r " + sn + ", phi>", "<x " + tn + ", phi>",
        [sg](const MultiPoly& phi) { return pair(act_r(sg), phi, Route::Spherical); },
        [t](const MultiPoly& phi) { return pair_mul_x(t, phi); });
    s.pairing(
        idx("transition_dr_sign_n", n), "<dr " + sn + ", phi>", "<(w dr) " + tn + ", phi>",
        [sg](const MultiPoly& phi) { return pair(act_dr(sg), phi, Route::Spherical); },
        [t](const MultiPoly& phi) { return pair_cartesian(apply_omega_dr(t), phi); });
    s.pairing(
        idx("transition_omega_sign_n", n), "<w " + sn + ", phi>", "<" + sn + ", w phi>",
        [sg](const MultiPoly& phi) { return pair(act_omega(sg), phi, Route::Spherical); },
        [sg](const MultiPoly& phi) { return pair_signum(sg, phi); });
  }
}

void remark_compositions(Suite& s) {
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    const G t = D(n);
    const Distribution& td = t.dist();
    s.id(idx("dist_r_r_n", n), act_r(act_r(t)), -mul_x(mul_x(td)));
    s.id(idx("dist_r_dr_n", n), act_r(act_dr(t)), apply_euler(td));
    if (n > 0)
      s.id(idx("dist_dr_r_n", n), act_dr(act_r(t)), apply_euler(td) + td);
    s.id(idx("dist_r_w_n", n), act_r(act_omega(t)), mul_x(td));
    s.id(idx("dist_w_r_n", n), act_omega(act_r(t)), mul_x(td));
    s.id(idx("dist_dr_w_n", n), act_dr(act_omega(t)), apply_omega_dr(td));
    s.id(idx("dist_w_dr_n", n), act_omega(act_dr(t)), apply_omega_dr(td));
    s.id(idx("dist_dr_dr_n", n), act_dr(act_dr(t)), -apply_omega_dr(apply_omega_dr(td)));
    s.id(idx("dist_w_w_n", n), act_omega(act_omega(t)), t * DimScalar(-1));
    if (n > 0)
      s.id(idx("dist_commutator_n", n), act_dr(act_r(t)) - act_r(act_dr(t)), t);

    // s[n] = w D^n delta; r and dr commute with w.
    const G sg = S(n);
    s.id(idx("sign_r_r_n", n), act_r(act_r(sg)), as_signum(-mul_x(mul_x(td))));
    s.id(idx("sign_r_dr_n", n), act_r(act_dr(sg)), as_signum(apply_euler(td)));
    if (n > 0)
      s.id(idx("sign_dr_r_n", n), act_dr(act_r(sg)), as_signum(apply_euler(td) + td));
    s.id(idx("sign_dr_dr_n", n), act_dr(act_dr(sg)), as_signum(-apply_omega_dr(apply_omega_dr(td))));
    s.id(idx("sign_r_w_n", n), act_r(act_omega(sg)), as_signum(mul_x(td)));
    s.id(idx("sign_w_r_n", n), act_omega(act_r(sg)), as_signum(mul_x(td)));
    s.id(idx("sign_dr_w_n", n), act_dr(act_omega(sg)), as_signum(apply_omega_dr(td)));
    s.id(idx("sign_w_dr_n", n), act_omega(act_dr(sg)), as_signum(apply_omega_dr(td)));
    s.id(idx("sign_w_w_n", n), act_omega(act_omega(sg)), sg * DimScalar(-1));
    if (n > 0)
      s.id(idx("sign_commutator_n", n), act_dr(act_r(sg)) - act_r(act_dr(sg)), sg);
    s.id(idx("sign_omega_is_dist_n", n), act_omega(sg), as_dist(sg) * DimScalar(-1));
  }
}

void homogeneity(Suite& s) {
  for (unsigned n = 0; n <= s.nmax(); ++n) {
    const DimScalar degree = -mp(n);
    const G t = D(n), sg = S(n);
    s.id(idx("dist_euler_n", n), apply(Operator::Euler, t), t * degree);
    s.id(idx("dist_r_dr_n", n), act_r(act_dr(t)), t * degree);
    s.id(idx("sign_r_dr_n", n), act_r(act_dr(sg)), sg * degree);
    const G radial_form = n % 2 == 0 ? dr_pow(n) : w(dr_pow(n));
    s.id(idx("radial_euler_n", n), apply(Operator::Euler, radial_form), radial_form * degree);
    // <E T, phi> = <T, -(m + E) phi>
    s.pairing(
        idx("euler_pairing_n", n), "<E D^" + std::to_string(n) + " delta, phi>", "<D^" + std::to_string(n) +
                                                                                 " delta, -(m+E) phi>",
        [t](const MultiPoly& phi) { return pair_cartesian(apply_euler(t.dist()), phi); },
        [t](const MultiPoly& phi) {
          MultiPoly adj(phi.dimension());
          for (const auto& [alpha, c] : phi.terms()) {
            long g = 0;
            for (unsigned a : alpha) g += a;
            adj.add_term(alpha, c * Rational(-(static_cast<long>(phi.dimension()) + g)));
          }
          return pair_cartesian(t.dist(), adj);
        });
  }
}

void physics_sec5(Suite& s) {
  for (unsigned l = 0; l + 1 <= s.k(); ++l) {
    const unsigned e = 2 * l, o = 2 * l + 1;
    const G even = dr_pow(e), odd_v = w(dr_pow(o)), sv = w(dr_pow(e)), sd = dr_pow(o);
    auto s0 = [e](const MultiPoly& phi) {
      return radial_deriv_at_zero(spherical_mean0(phi), e) * physics_constant(e, phi.dimension());
    };
    auto s1 = [o](const MultiPoly& phi) {
      return radial_deriv_at_zero(spherical_mean1(phi), o) * -physics_constant(o, phi.dimension());
    };
    const std::string ls = std::to_string(e), os = std::to_string(o);
    s.pairing(
        idx("dr_even_l", l), "<dr^" + ls + " delta, phi>", "P(" + ls + ") dr^" + ls + " S0(0)",
        [even](const MultiPoly& phi) { return pair(even, phi); }, s0);
    s.pairing(
        idx("omega_dr_odd_l", l), "<(w dr^" + os + ") delta, phi>", "-P(" + os + ") dr^" + os + " S1(0)",
        [odd_v](const MultiPoly& phi) { return pair(odd_v, phi); }, s1);
    s.pairing(
        idx("signum_omega_dr_even_l", l), "<w dr^" + ls + " delta, w phi>", "-P(" + ls + ") dr^" + ls + " S0(0)",
        [sv](const MultiPoly& phi) { return pair(sv, phi); },
        [s0](const MultiPoly& phi) { return s0(phi) * Rational(-1); });
    s.pairing(
        idx("signum_dr_odd_l", l), "<dr^" + os + " delta, w phi>", "-P(" + os + ") dr^" + os + " S1(0)",
        [sd](const MultiPoly& phi) { return pair(sd, phi); }, s1);
  }
  for (unsigned n = 0; n <= s.nmax() + 1; ++n) {
    const G t = D(n), sg = S(n);
    s.pairing(
        idx("dual_route_n", n), "<D^" + std::to_string(n) + " delta, phi> cartesian", "spherical",
        [t](const MultiPoly& phi) { return pair(t, phi, Route::Cartesian); },
        [t](const MultiPoly& phi) { return pair(t, phi, Route::Spherical); });
    s.pairing(
        idx("physics_route_dist_n", n), "<D^" + std::to_string(n) + " delta, phi> cartesian", "physics",
        [t](const MultiPoly& phi) { return pair(t, phi); }, [t](const MultiPoly& phi) { return pair_physics(t, phi); });
    s.pairing(
        idx("physics_route_sign_n", n), "<s[" + std::to_string(n) + "], w phi> cartesian", "physics",
        [sg](const MultiPoly& phi) { return pair(sg, phi); },
        [sg](const MultiPoly& phi) { return pair_physics(sg, phi); });
  }
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"prop31", prop31},
      {"prop32", prop32},
      {"cor33", cor33},
      {"cor34", cor34},
      {"identities_x", identities_x},
      {"prop35", prop35},
      {"examples_sec7", examples_sec7},
      {"properties_sec8", properties_sec8},
      {"remark_compositions", remark_compositions},
      {"homogeneity", homogeneity},
      {"physics_sec5", physics_sec5},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Verifier v(cfg);
    Suite s{v, {name, {}}};
    fn(s);
    std::stable_sort(s.report.entries.begin(), s.report.entries.end(),
                     [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
    return std::move(s.report);
  }
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyConfig& cfg) {
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw Error(ErrorCode::UnknownSuite, "unknown suite '" + n + "'");
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, cfg));
  std::vector<SuiteReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace signumcalc
