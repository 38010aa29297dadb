#pragma once

// Polynomial test functions in a concrete dimension m, their Dirac and
// Laplace derivatives at the origin, and exact spherical means.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kernel.hpp"
#include "symq.hpp"

namespace signumcalc {

using MultiIndex = std::vector<unsigned>;

class MultiPoly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit MultiPoly(unsigned m);

  static MultiPoly constant(unsigned m, const Rational& c);
  /// x_i, 0-based.
  static MultiPoly variable(unsigned m, unsigned i);
  static MultiPoly monomial(MultiIndex alpha, const Rational& c);

  unsigned dimension() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const MultiIndex& alpha, const Rational& c);

  Rational value_at_zero() const;
  MultiPoly derivative(unsigned j) const;
  MultiPoly laplacian() const;
  MultiPoly times_variable(unsigned i) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_ == b.m_ && a.terms_ == b.terms_; }

  /// "3*x1^2*x2 - 1/2*x3"; "0" for the zero polynomial.
  std::string to_string() const;
  /// [[alpha...], "p/q"] per term.
  std::string to_json() const;

 private:
  void check_index(const MultiIndex& alpha) const;

  unsigned m_;
  Terms terms_;
};

/// Component j is the partial derivative in x_{j+1}.
using VectorPoly = std::vector<MultiPoly>;

/// Value of a pairing: a scalar part, a vector part, or both when the paired
/// object mixes parities.
class PairingValue {
 public:
  PairingValue() = default;
  static PairingValue scalar(const Rational& s);
  static PairingValue vector(std::vector<Rational> v);

  bool has_scalar() const { return scalar_.has_value(); }
  bool has_vector() const { return vector_.has_value(); }
  bool is_mixed() const { return has_scalar() && has_vector(); }
  bool is_zero() const;

  /// Throw KindMismatch when the requested part is missing or the value is mixed.
  const Rational& as_scalar() const;
  const std::vector<Rational>& as_vector() const;

  Rational scalar_part() const { return scalar_.value_or(Rational(0)); }
  const std::optional<std::vector<Rational>>& vector_part() const { return vector_; }

  PairingValue& operator+=(const PairingValue& o);
  PairingValue& operator*=(const Rational& s);
  friend PairingValue operator+(PairingValue a, const PairingValue& b) { return a += b; }
  friend PairingValue operator*(PairingValue a, const Rational& s) { return a *= s; }
  friend PairingValue operator*(const Rational& s, PairingValue a) { return a *= s; }

  /// Missing parts compare as zero.
  friend bool operator==(const PairingValue& a, const PairingValue& b);

  /// "2", "(-1, 0, 0)" or "2 + (-1, 0, 0)"; "0" when empty.
  std::string to_string() const;

 private:
  std::optional<Rational> scalar_;
  std::optional<std::vector<Rational>> vector_;
};

/// Polynomial in r with scalar or m-vector coefficients.
class RadialPoly {
 public:
  RadialPoly(Kind kind, unsigned components);

  Kind kind() const { return kind_; }
  unsigned components() const { return components_; }
  const std::map<unsigned, std::vector<Rational>>& terms() const { return terms_; }

  void add(unsigned power, unsigned component, const Rational& c);
  std::vector<Rational> coefficient(unsigned power) const;

  friend bool operator==(const RadialPoly& a, const RadialPoly& b) {
    return a.kind_ == b.kind_ && a.components_ == b.components_ && a.terms_ == b.terms_;
  }

 private:
  Kind kind_;
  unsigned components_;
  std::map<unsigned, std::vector<Rational>> terms_;
};

VectorPoly dirac_apply(const MultiPoly& phi);

/// n even: ((-L)^{n/2} phi)(0); n odd: (D (-L)^{(n-1)/2} phi)(0) componentwise.
PairingValue dirac_power_at_zero(const MultiPoly& phi, unsigned n);

/// Normalized moment of omega^alpha over the unit sphere in R^m.
Rational sphere_moment(const MultiIndex& alpha, long m);

RadialPoly spherical_mean0(const MultiPoly& phi);
RadialPoly spherical_mean1(const MultiPoly& phi);

PairingValue radial_deriv_at_zero(const RadialPoly& p, unsigned n);

MultiPoly random_poly(unsigned m, unsigned max_degree, std::uint64_t seed);

/// Parses "3*x1^2*x2 - 1/2*x3"; variables x1..xm. Throws ParseError.
MultiPoly parse_poly(std::string_view text, unsigned m);
/// Inverse of MultiPoly::to_json. Throws ParseError.
MultiPoly poly_from_json(std::string_view text, unsigned m);

}  // namespace signumcalc
