#include <doctest.h>

#include "oracle.hpp"
#include "poly.hpp"

using namespace signumcalc;

namespace {

const DimScalar m = DimScalar::m();

GeneralizedFunction D(unsigned n, const DimScalar& c = DimScalar(1)) { return dirac_basis(n, c); }
GeneralizedFunction S(unsigned n, const DimScalar& c = DimScalar(1)) { return signum_basis(n, c); }

PairingValue vec3(long a, long b, long c) { return PairingValue::vector({Rational(a), Rational(b), Rational(c)}); }

}  // namespace

TEST_CASE("sphere constants") {
  CHECK(c_constant(0, 3) == Rational(1));
  CHECK(c_constant(1, 3) == Rational(3));
  CHECK(c_constant(2, 2) == Rational(8, 3));
  CHECK(physics_constant(2, 3) == Rational(6));
}

TEST_CASE("cartesian and spherical pairings") {
  MultiPoly x1sq = parse_poly("x1^2", 3), x1 = parse_poly("x1", 3);
  CHECK(pair_cartesian(delta(), x1sq) == PairingValue::scalar(0));
  CHECK(pair_cartesian(dirac_basis(2, -1), x1sq) == PairingValue::scalar(2));
  CHECK(pair_cartesian(dirac_basis(1), x1) == vec3(-1, 0, 0));

  CHECK(pair_spherical(dirac_basis(2), x1sq) == PairingValue::scalar(-2));
  CHECK(pair_spherical(dirac_basis(1), x1) == vec3(-1, 0, 0));
  CHECK(pair_spherical(delta(), MultiPoly::constant(3, 1)) == PairingValue::scalar(1));
}

TEST_CASE("signum pairings") {
  MultiPoly seven = MultiPoly::constant(3, 7);
  CHECK(pair(act_omega(delta()), seven) == PairingValue::scalar(-7));
  CHECK(pair(act_dr(delta()), parse_poly("x1", 3)) == vec3(-1, 0, 0));
  CHECK(pair(GeneralizedFunction::zero(Space::Sign), seven).is_zero());
  for (Route r : {Route::Cartesian, Route::Spherical})
    CHECK(pair_signum(signum_basis(2), parse_poly("x1^2", 3), r) == PairingValue::scalar(2));
}

TEST_CASE("dual route agreement") {
  for (long dim : {2L, 3L, 4L, 5L})
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      MultiPoly phi = random_poly(static_cast<unsigned>(dim), 8, seed);
      for (unsigned n = 0; n <= 10; ++n) {
        Distribution t = dirac_basis(n);
        CHECK(pair_cartesian(t, phi) == pair_spherical(t, phi));
      }
    }
}

TEST_CASE("parity annihilation") {
  for (long dim : {2L, 3L, 5L})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      MultiPoly phi = random_poly(static_cast<unsigned>(dim), 8, seed);
      MultiPoly odd(static_cast<unsigned>(dim)), even(static_cast<unsigned>(dim));
      for (const auto& [alpha, c] : phi.terms()) {
        unsigned deg = 0;
        for (unsigned a : alpha) deg += a;
        (deg % 2 ? odd : even).add_term(alpha, c);
      }
      for (unsigned n = 0; n <= 8; ++n) {
        const MultiPoly& wrong = n % 2 == 0 ? odd : even;
        CHECK(pair_cartesian(dirac_basis(n), wrong).is_zero());
        CHECK(pair_spherical(dirac_basis(n), wrong).is_zero());
      }
    }
}

TEST_CASE("physics form matches the basis pairing") {
  for (long dim : {2L, 3L, 5L})
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      MultiPoly phi = random_poly(static_cast<unsigned>(dim), 8, seed);
      for (unsigned n = 0; n <= 8; ++n) {
        for (GeneralizedFunction g : {D(n), S(n)}) CHECK(pair_physics(g, phi) == pair(g, phi, Route::Spherical));
      }
    }
}

TEST_CASE("clifford multiplication by x") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MultiPoly phi = random_poly(3, 8, seed);
    for (unsigned n = 0; n <= 7; ++n) CHECK(pair_mul_x(dirac_basis(n), phi) == pair_cartesian(mul_x(dirac_basis(n)), phi));
  }
}

TEST_CASE("identity checks") {
  VerifyConfig cfg;
  CHECK(verify_identity("prop32", apply_omega_dr(delta()), apply_dirac(delta()), cfg).pass);
  CHECK(verify_identity("romegadr", act_r(apply_dirac(delta())), act_omega(delta()) * DimScalar(-m), cfg).pass);
  CHECK(verify_identity("gamma", apply_gamma(delta()), Distribution{}, cfg).pass);
  ReportEntry bad = verify_identity("bad", D(2), D(2, 2), cfg);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.detail.empty());
  CHECK_THROWS_AS(verify_identity("mixed", D(0), S(0), cfg), Error);
}

TEST_CASE("evaluation commutes with rewriting") {
  for (long m0 : {2L, 3L, 5L})
    for (unsigned n = 0; n <= 8; ++n)
      for (GeneralizedFunction g : {D(n, DimScalar::m_plus(1)), S(n, DimScalar(1) / m)})
        for (auto op : {Operator::R, Operator::Dr, Operator::Omega}) {
          CHECK(specialize(apply(op, g), m0) == specialize(apply(op, specialize(g, m0)), m0));
          if (g.is_dist())
            CHECK(specialize(apply(Operator::Dirac, g), m0) == specialize(apply(Operator::Dirac, specialize(g, m0)), m0));
        }
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 11);
  VerifyConfig cfg;
  for (const char* name : {"prop31", "remark_compositions", "cor34"}) {
    SuiteReport r = run_suite(name, cfg);
    CAPTURE(name);
    CHECK(r.all_pass());
    CHECK_FALSE(r.entries.empty());
  }
  CHECK_THROWS_AS(run_suite("nosuch", cfg), Error);
  auto all = run_suites(suite_names(), cfg);
  REQUIRE(all.size() == 11);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].suite == suite_names()[i]);
    for (const auto& e : all[i].entries) {
      CAPTURE(e.id);
      CAPTURE(e.detail);
      CHECK(e.pass);
    }
  }
}

TEST_CASE("suites are deterministic") {
  VerifyConfig cfg;
  cfg.kmax = 2;
  cfg.seed = 9;
  SuiteReport a = run_suite("properties_sec8", cfg), b = run_suite("properties_sec8", cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].id == b.entries[i].id);
    CHECK(a.entries[i].lhs == b.entries[i].lhs);
  }
  CHECK(trial_poly(cfg, 3, 1) == trial_poly(cfg, 3, 1));
}
