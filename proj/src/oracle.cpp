#include "oracle.hpp"

#include "parser.hpp"

namespace signumcalc {

namespace {

Rational sign_of(unsigned k) { return Rational(k % 2 == 0 ? 1 : -1); }

MultiPoly minus_laplacian_pow(MultiPoly p, unsigned k) {
  for (unsigned i = 0; i < k && !p.is_zero(); ++i) p = p.laplacian() * Rational(-1);
  return p;
}

}  // namespace

Rational c_constant(unsigned l, long m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "C(l) needs m >= 2");
  Rational c = power_of_two(2 * l) * factorial(l) / factorial(2 * l);
  for (unsigned j = 0; j < l; ++j) c *= Rational(mpz_class(m + 2 * static_cast<long>(j)), mpz_class(2));
  return c;
}

Rational physics_constant(unsigned n, long m) {
  Rational p(1);
  for (unsigned j = 0; j < n; ++j) p *= Rational(m + static_cast<long>(j));
  return p / factorial(n);
}

PairingValue pair_cartesian(const Distribution& t, const MultiPoly& phi) {
  const long m = phi.dimension();
  PairingValue out;
  for (const auto& [n, c] : t.terms()) out += dirac_power_at_zero(phi, n) * (c.eval(m) * sign_of(n));
  return out;
}

PairingValue pair_spherical(const Distribution& t, const MultiPoly& phi) {
  const long m = phi.dimension();
  if (t.is_zero()) return {};
  const RadialPoly s0 = spherical_mean0(phi);
  const RadialPoly s1 = spherical_mean1(phi);
  PairingValue out;
  for (const auto& [n, c] : t.terms()) {
    unsigned l = n / 2;
    Rational w = c.eval(m) * sign_of(l);
    if (n % 2 == 0) out += radial_deriv_at_zero(s0, n) * (w * c_constant(l, m));
    else out += radial_deriv_at_zero(s1, n) * (-w * c_constant(l + 1, m));
  }
  return out;
}

PairingValue pair_signum(const SignumDistribution& s, const MultiPoly& phi, Route route) {
  PairingValue out;
  for (const auto& [n, c] : s.terms()) {
    Distribution basis = dirac_basis(n, c);
    out += (route == Route::Cartesian ? pair_cartesian(basis, phi) : pair_spherical(basis, phi)) * Rational(-1);
  }
  return out;
}

PairingValue pair(const GeneralizedFunction& g, const MultiPoly& phi, Route route) {
  if (!g.is_dist()) return pair_signum(g.sign(), phi, route);
  return route == Route::Cartesian ? pair_cartesian(g.dist(), phi) : pair_spherical(g.dist(), phi);
}

PairingValue pair_physics(const GeneralizedFunction& g, const MultiPoly& phi) {
  const long m = phi.dimension();
  if (g.is_zero()) return {};
  const RadialPoly s0 = spherical_mean0(phi);
  const RadialPoly s1 = spherical_mean1(phi);
  PairingValue out;
  for (const auto& term : to_radial(g)) {
    Rational w = term.coefficient.eval(m) * physics_constant(term.order, m);
    switch (term.label) {
      case RadialLabel::D: out += radial_deriv_at_zero(s0, term.order) * w; break;
      case RadialLabel::V: out += radial_deriv_at_zero(s1, term.order) * -w; break;
      // <(w dr^n) delta, w phi> = -<dr^n delta, phi>
      case RadialLabel::SV: out += radial_deriv_at_zero(s0, term.order) * -w; break;
      // <dr^n delta, w phi> = <(w dr^n) delta, phi>
      case RadialLabel::SD: out += radial_deriv_at_zero(s1, term.order) * -w; break;
    }
  }
  return out;
}

PairingValue pair_mul_x(const Distribution& t, const MultiPoly& phi) {
  const unsigned m = phi.dimension();
  PairingValue out;
  std::map<std::pair<unsigned, unsigned>, Rational> bivector;
  for (const auto& [n, c] : t.terms()) {
    Rational cm = c.eval(m);
    unsigned k = n / 2;
    if (n % 2 == 0) {
      std::vector<Rational> v;
      for (unsigned i = 0; i < m; ++i) v.push_back(minus_laplacian_pow(phi.times_variable(i), k).value_at_zero());
      out += PairingValue::vector(std::move(v)) * cm;
      continue;
    }
    // w_ij = d_j (-L)^k (x_i phi) at 0; (-1) sum_ij e_i e_j w_ij
    std::vector<std::vector<Rational>> w(m, std::vector<Rational>(m));
    for (unsigned i = 0; i < m; ++i) {
      MultiPoly p = minus_laplacian_pow(phi.times_variable(i), k);
      for (unsigned j = 0; j < m; ++j) w[i][j] = p.derivative(j).value_at_zero();
    }
    Rational trace(0);
    for (unsigned i = 0; i < m; ++i) trace += w[i][i];
    out += PairingValue::scalar(trace * cm);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i + 1; j < m; ++j) bivector[{i, j}] += (w[j][i] - w[i][j]) * cm;
  }
  for (const auto& [ij, b] : bivector)
    if (!b.is_zero())
      throw Error(ErrorCode::KindMismatch, "bivector part e" + std::to_string(ij.first + 1) + "e" +
                                               std::to_string(ij.second + 1) + " = " + b.to_string() +
                                               " in <x T, phi>");
  return out;
}

// ---------------------------------------------------------------- reports

bool SuiteReport::all_pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.pass ? 0 : 1;
  return n;
}

MultiPoly trial_poly(const VerifyConfig& cfg, long m, unsigned trial) {
  std::uint64_t s = cfg.seed * 0x9E3779B97F4A7C15ULL;
  s ^= static_cast<std::uint64_t>(m) * 0xBF58476D1CE4E5B9ULL;
  s ^= static_cast<std::uint64_t>(trial) * 0x94D049BB133111EBULL;
  return random_poly(static_cast<unsigned>(m), cfg.max_degree, s);
}

// ---------------------------------------------------------------- Verifier

Verifier::Verifier(VerifyConfig cfg) : cfg_(std::move(cfg)) {
  for (long m : cfg_.dims)
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "verification dimensions must be >= 2, got " + std::to_string(m));
}

Verifier::Table& Verifier::table(long m, unsigned trial) {
  auto key = std::make_pair(m, trial);
  auto it = tables_.find(key);
  if (it == tables_.end()) it = tables_.emplace(key, Table{trial_poly(cfg_, m, trial), {}, {}}).first;
  return it->second;
}

const PairingValue& Verifier::basis_pairing(long m, unsigned trial, unsigned n, Route route) {
  Table& t = table(m, trial);
  auto& cache = route == Route::Cartesian ? t.cartesian : t.spherical;
  while (cache.size() <= n) {
    Distribution b = dirac_basis(static_cast<unsigned>(cache.size()));
    cache.push_back(route == Route::Cartesian ? pair_cartesian(b, t.phi) : pair_spherical(b, t.phi));
  }
  return cache[n];
}

PairingValue Verifier::paired(const GeneralizedFunction& g, long m, unsigned trial, Route route) {
  PairingValue out;
  Rational sign(g.is_dist() ? 1 : -1);
  for (const auto& [n, c] : g.terms()) out += basis_pairing(m, trial, n, route) * (c.eval(m) * sign);
  return out;
}

namespace {

std::string mismatch(const char* what, long m, unsigned trial, const PairingValue& a, const PairingValue& b) {
  return std::string(what) + " at m=" + std::to_string(m) + ", trial " + std::to_string(trial) + ": " +
         a.to_string() + " != " + b.to_string();
}

}  // namespace

ReportEntry Verifier::identity(const std::string& id, const GeneralizedFunction& lhs,
                               const GeneralizedFunction& rhs) {
  if (lhs.space() != rhs.space())
    throw Error(ErrorCode::SpaceMismatch, id + ": lhs is a " + to_string(lhs.space()) + ", rhs is a " +
                                              to_string(rhs.space()));
  ReportEntry e{id, false, print_canonical(lhs), print_canonical(rhs), cfg_.dims, cfg_.seed, {}};
  if (!(lhs == rhs)) {
    e.detail = "symbolic forms differ";
    return e;
  }
  try {
    for (long m : cfg_.dims) {
      for (unsigned t = 0; t < cfg_.trials; ++t) {
        PairingValue lc = paired(lhs, m, t, Route::Cartesian);
        PairingValue rc = paired(rhs, m, t, Route::Cartesian);
        if (!(lc == rc)) {
          e.detail = mismatch("cartesian pairing", m, t, lc, rc);
          return e;
        }
        PairingValue ls = paired(lhs, m, t, Route::Spherical);
        PairingValue rs = paired(rhs, m, t, Route::Spherical);
        if (!(ls == rs)) {
          e.detail = mismatch("spherical pairing", m, t, ls, rs);
          return e;
        }
        if (!(lc == ls)) {
          e.detail = mismatch("cartesian vs spherical route", m, t, lc, ls);
          return e;
        }
      }
    }
  } catch (const Error& err) {
    e.detail = err.what();
    return e;
  }
  e.pass = true;
  return e;
}

ReportEntry Verifier::pairing(const std::string& id, const std::string& lhs_text, const std::string& rhs_text,
                              const PairingFn& lhs, const PairingFn& rhs) {
  ReportEntry e{id, false, lhs_text, rhs_text, cfg_.dims, cfg_.seed, {}};
  try {
    for (long m : cfg_.dims) {
      for (unsigned t = 0; t < cfg_.trials; ++t) {
        const MultiPoly& phi = table(m, t).phi;
        PairingValue a = lhs(phi);
        PairingValue b = rhs(phi);
        if (!(a == b)) {
          e.detail = mismatch("pairing", m, t, a, b);
          return e;
        }
      }
    }
  } catch (const Error& err) {
    e.detail = err.what();
    return e;
  }
  e.pass = true;
  return e;
}

ReportEntry verify_identity(const std::string& id, const GeneralizedFunction& lhs, const GeneralizedFunction& rhs,
                            const VerifyConfig& cfg) {
  Verifier v(cfg);
  return v.identity(id, lhs, rhs);
}

}  // namespace signumcalc
