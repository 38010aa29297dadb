#pragma once

// Exact pairings of distributions and signumdistributions with polynomial
// test functions, by the cartesian route (derivatives at the origin) and the
// spherical route (spherical means), plus the identity checker behind the
// verification suites.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kernel.hpp"
#include "poly.hpp"

namespace signumcalc {

enum class Route { Cartesian, Spherical };

/// 2^{2l} l!/(2l)! (m/2)(m/2+1)...(m/2+l-1).
Rational c_constant(unsigned l, long m);

/// m(m+1)...(m+n-1)/n!.
Rational physics_constant(unsigned n, long m);

PairingValue pair_cartesian(const Distribution& t, const MultiPoly& phi);
PairingValue pair_spherical(const Distribution& t, const MultiPoly& phi);

/// <S, w phi> under the contract <s[n], w phi> = -<D^n delta, phi>.
PairingValue pair_signum(const SignumDistribution& s, const MultiPoly& phi, Route route = Route::Cartesian);

/// Dispatches on the space tag: <T, phi> for distributions, <S, w phi> for
/// signumdistributions.
PairingValue pair(const GeneralizedFunction& g, const MultiPoly& phi, Route route = Route::Cartesian);

/// <g, phi> (or <g, w phi>) read off the radial form through the physics
/// expressions for dr^n delta and (w dr^n) delta in terms of spherical means.
PairingValue pair_physics(const GeneralizedFunction& g, const MultiPoly& phi);

/// <x T, phi> = sum_i e_i <T, x_i phi>, multiplied out in the Clifford algebra
/// (e_i e_i = -1). Throws KindMismatch if a bivector part survives.
PairingValue pair_mul_x(const Distribution& t, const MultiPoly& phi);

// ---------------------------------------------------------------- suites

struct VerifyConfig {
  unsigned kmax = 4;
  std::vector<long> dims{2, 3, 5};
  unsigned trials = 25;
  unsigned max_degree = 8;
  std::uint64_t seed = 0;
};

struct ReportEntry {
  std::string id;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::vector<long> dims;
  std::uint64_t seed = 0;
  std::string detail;  // first mismatch, empty on pass
};

struct SuiteReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  std::size_t failures() const;
};

/// The random test function used for trial `trial` in dimension m.
MultiPoly trial_poly(const VerifyConfig& cfg, long m, unsigned trial);

/// Checks lhs = rhs symbolically and by pairing against the configured
/// random test functions. Distributions are compared by both routes.
class Verifier {
 public:
  explicit Verifier(VerifyConfig cfg);

  const VerifyConfig& config() const { return cfg_; }

  ReportEntry identity(const std::string& id, const GeneralizedFunction& lhs, const GeneralizedFunction& rhs);

  /// Pairing-only check: lhs(phi) = rhs(phi) for every configured m and trial.
  using PairingFn = std::function<PairingValue(const MultiPoly&)>;
  ReportEntry pairing(const std::string& id, const std::string& lhs_text, const std::string& rhs_text,
                      const PairingFn& lhs, const PairingFn& rhs);

  /// Cached <D^n delta, phi_trial> in dimension m.
  const PairingValue& basis_pairing(long m, unsigned trial, unsigned n, Route route);

 private:
  struct Table {
    MultiPoly phi;
    std::vector<PairingValue> cartesian;
    std::vector<PairingValue> spherical;
  };

  Table& table(long m, unsigned trial);
  PairingValue paired(const GeneralizedFunction& g, long m, unsigned trial, Route route);

  VerifyConfig cfg_;
  std::map<std::pair<long, unsigned>, Table> tables_;
};

/// One-off form of Verifier::identity.
ReportEntry verify_identity(const std::string& id, const GeneralizedFunction& lhs, const GeneralizedFunction& rhs,
                            const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg);

/// Runs the named suites concurrently; reports come back in input order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyConfig& cfg);

}  // namespace signumcalc
