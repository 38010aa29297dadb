#include <doctest.h>

#include "poly.hpp"

using namespace signumcalc;

namespace {

std::vector<Rational> vec(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Applies d^2/dr^2 + (m-1)/r d/dr to an even polynomial in r.
RadialPoly radial_laplacian(const RadialPoly& p, long m) {
  RadialPoly out(Kind::Scalar, 1);
  for (const auto& [k, c] : p.terms()) {
    if (k < 2) continue;
    out.add(k - 2, 0, c[0] * Rational(static_cast<long>(k) * (static_cast<long>(k) - 1 + m - 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("dirac gradient") {
  MultiPoly x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1);
  VectorPoly g = dirac_apply(x1);
  CHECK(g[0] == MultiPoly::constant(3, 1));
  CHECK(g[1].is_zero());
  g = dirac_apply(parse_poly("x1^2", 3));
  CHECK(g[0] == x1 * Rational(2));
  g = dirac_apply(parse_poly("x1*x2", 3));
  CHECK(g[0] == x2);
  CHECK(g[1] == x1);
  CHECK(g[2].is_zero());
}

TEST_CASE("dirac powers at the origin") {
  CHECK(dirac_power_at_zero(parse_poly("x1^2", 3), 2) == PairingValue::scalar(-2));
  CHECK(dirac_power_at_zero(parse_poly("x1", 3), 1) == PairingValue::vector(vec({1, 0, 0})));
  CHECK(dirac_power_at_zero(MultiPoly::constant(3, 1), 0) == PairingValue::scalar(1));
}

TEST_CASE("sphere moments") {
  CHECK(sphere_moment({2, 0, 0}, 3) == Rational(1, 3));
  CHECK(sphere_moment({1, 0, 0}, 3) == Rational(0));
  CHECK(sphere_moment({2, 2}, 2) == Rational(1, 8));
  CHECK(sphere_moment({0, 0, 0, 0}, 4) == Rational(1));
  CHECK_THROWS_AS(sphere_moment({2}, 1), Error);
}

TEST_CASE("spherical means") {
  RadialPoly s0 = spherical_mean0(parse_poly("x1^2", 3));
  CHECK(s0.coefficient(2) == std::vector<Rational>{Rational(1, 3)});
  CHECK(spherical_mean0(MultiPoly::constant(3, 1)).coefficient(0)[0] == Rational(1));
  CHECK(spherical_mean0(parse_poly("x1", 3)).terms().empty());

  RadialPoly s1 = spherical_mean1(parse_poly("x1", 3));
  CHECK(s1.coefficient(1) == std::vector<Rational>{Rational(1, 3), Rational(0), Rational(0)});
  CHECK(spherical_mean1(MultiPoly::constant(3, 1)).terms().empty());
  CHECK(spherical_mean1(parse_poly("x1^2", 3)).terms().empty());
}

TEST_CASE("radial derivatives at zero") {
  RadialPoly p(Kind::Scalar, 1);
  p.add(2, 0, Rational(1, 3));
  CHECK(radial_deriv_at_zero(p, 2) == PairingValue::scalar(Rational(2, 3)));
  CHECK(radial_deriv_at_zero(p, 1) == PairingValue::scalar(0));
  RadialPoly v(Kind::Vector, 3);
  v.add(1, 0, Rational(1, 3));
  CHECK(radial_deriv_at_zero(v, 1) == PairingValue::vector({Rational(1, 3), Rational(0), Rational(0)}));
}

TEST_CASE("random polynomials") {
  MultiPoly c = random_poly(3, 0, 11);
  CHECK(c.degree() <= 0);
  CHECK(random_poly(2, 4, 0) == random_poly(2, 4, 0));
  MultiPoly p = random_poly(3, 8, 1);
  CHECK(p.dimension() == 3);
  CHECK(p.degree() <= 8);
  CHECK_FALSE(random_poly(3, 8, 1) == random_poly(3, 8, 2));
}

TEST_CASE("mean parity, value at zero and Pizzetti consistency") {
  for (long m : {2L, 3L, 4L, 5L}) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      MultiPoly phi = random_poly(static_cast<unsigned>(m), 8, seed);
      RadialPoly s0 = spherical_mean0(phi), s1 = spherical_mean1(phi);
      for (const auto& [k, c] : s0.terms()) CHECK(k % 2 == 0);
      for (const auto& [k, c] : s1.terms()) CHECK(k % 2 == 1);
      CHECK(s0.coefficient(0)[0] == phi.value_at_zero());
      RadialPoly lhs = spherical_mean0(phi.laplacian()), rhs = radial_laplacian(s0, m);
      for (unsigned k = 0; k <= 8; ++k) CHECK(lhs.coefficient(k) == rhs.coefficient(k));
    }
  }
}

TEST_CASE("polynomial text and json") {
  MultiPoly p = parse_poly("3*x1^2*x2 - 1/2*x3", 3);
  CHECK(p.to_string() == "3*x1^2*x2 - 1/2*x3");
  CHECK(parse_poly(p.to_string(), 3) == p);
  CHECK(poly_from_json(p.to_json(), 3) == p);
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(parse_poly("x3 + x1^2", 3).to_string() == "x1^2 + x3");
  for (const char* bad : {"x4", "x1^", "3*", "1/0", "x0", "y1", "(x1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad, 3), ParseError);
  }
  try {
    parse_poly("x1 + x9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("pairing values") {
  PairingValue s = PairingValue::scalar(2), v = PairingValue::vector(vec({-1, 0, 0}));
  CHECK(s.to_string() == "2");
  CHECK(v.to_string() == "(-1, 0, 0)");
  PairingValue mixed = s + v;
  CHECK(mixed.is_mixed());
  CHECK(mixed.to_string() == "2 + (-1, 0, 0)");
  CHECK(PairingValue().to_string() == "0");
  CHECK(PairingValue() == PairingValue::vector(vec({0, 0, 0})));
  CHECK_THROWS_AS(mixed.as_scalar(), Error);
  CHECK_THROWS_AS(s.as_vector(), Error);
  CHECK(s.as_scalar() == Rational(2));
}
