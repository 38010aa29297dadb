#pragma once

// Canonical forms for distributions and signumdistributions supported at the
// origin, and the rewrite rules for r, dr, w and the classical operators.
//
// Distributions are combinations of D^n delta (powers of the Dirac operator).
// Signumdistributions are combinations of s[n], the w-associate of D^n delta,
// fixed by the pairing contract <s[n], w phi> = -<D^n delta, phi>.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "symq.hpp"

namespace signumcalc {

enum class Space { Dist, Sign };
enum class Kind { Scalar, Vector };

/// D^n delta is scalar for even n; s[n] is scalar for odd n.
constexpr Kind kind_of(Space space, unsigned n) {
  bool even = n % 2 == 0;
  return (space == Space::Dist) == even ? Kind::Scalar : Kind::Vector;
}

const char* to_string(Space space);

/// Finite linear combination of basis elements of one space, without stored
/// zero coefficients.
template <Space S>
class BasisSum {
 public:
  using Terms = std::map<unsigned, DimScalar>;
  static constexpr Space space = S;

  BasisSum() = default;

  static BasisSum basis(unsigned n, const DimScalar& c = DimScalar(1)) {
    BasisSum b;
    b.add_term(n, c);
    return b;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DimScalar coefficient(unsigned n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? DimScalar(0) : it->second;
  }

  void add_term(unsigned n, const DimScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasisSum& operator+=(const BasisSum& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  BasisSum& operator-=(const BasisSum& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  BasisSum& operator*=(const DimScalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
  }

  friend BasisSum operator+(BasisSum a, const BasisSum& b) { return a += b; }
  friend BasisSum operator-(BasisSum a, const BasisSum& b) { return a -= b; }
  friend BasisSum operator*(BasisSum a, const DimScalar& s) { return a *= s; }
  friend BasisSum operator*(const DimScalar& s, BasisSum a) { return a *= s; }
  BasisSum operator-() const { return *this * DimScalar(-1); }

  friend bool operator==(const BasisSum& a, const BasisSum& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using Distribution = BasisSum<Space::Dist>;
using SignumDistribution = BasisSum<Space::Sign>;

inline Distribution delta() { return Distribution::basis(0); }
inline Distribution dirac_basis(unsigned n, const DimScalar& c = DimScalar(1)) {
  return Distribution::basis(n, c);
}
inline SignumDistribution signum_basis(unsigned n, const DimScalar& c = DimScalar(1)) {
  return SignumDistribution::basis(n, c);
}

/// Either a distribution or a signumdistribution.
class GeneralizedFunction {
 public:
  GeneralizedFunction() : value_(Distribution{}) {}
  GeneralizedFunction(Distribution d) : value_(std::move(d)) {}        // NOLINT
  GeneralizedFunction(SignumDistribution s) : value_(std::move(s)) {}  // NOLINT

  static GeneralizedFunction zero(Space space);

  Space space() const { return value_.index() == 0 ? Space::Dist : Space::Sign; }
  bool is_dist() const { return space() == Space::Dist; }
  bool is_zero() const { return terms().empty(); }

  /// Throws SpaceMismatch when the tag does not match.
  const Distribution& dist() const;
  const SignumDistribution& sign() const;

  const std::map<unsigned, DimScalar>& terms() const;

  GeneralizedFunction& operator+=(const GeneralizedFunction& o);
  GeneralizedFunction& operator*=(const DimScalar& s);
  friend GeneralizedFunction operator+(GeneralizedFunction a, const GeneralizedFunction& b) {
    return a += b;
  }
  friend GeneralizedFunction operator-(GeneralizedFunction a, const GeneralizedFunction& b) {
    return a += b * DimScalar(-1);
  }
  friend GeneralizedFunction operator*(GeneralizedFunction a, const DimScalar& s) { return a *= s; }
  friend GeneralizedFunction operator*(const DimScalar& s, GeneralizedFunction a) { return a *= s; }

  friend bool operator==(const GeneralizedFunction& a, const GeneralizedFunction& b) {
    return a.value_ == b.value_;
  }

 private:
  std::variant<Distribution, SignumDistribution> value_;
};

bool is_equal(const GeneralizedFunction& a, const GeneralizedFunction& b);

/// Replaces every coefficient by its value at m = m0.
GeneralizedFunction specialize(const GeneralizedFunction& g, long m0);

// ---------------------------------------------------------------- radial view

/// d: dr^n delta (n even), v: (w dr^n) delta (n odd),
/// sd: dr^n delta (n odd, signum), sv: (w dr^n) delta (n even, signum).
enum class RadialLabel { D, V, SD, SV };

const char* to_string(RadialLabel label);
Space space_of(RadialLabel label);

struct RadialTerm {
  RadialLabel label;
  unsigned order;
  DimScalar coefficient;

  friend bool operator==(const RadialTerm&, const RadialTerm&) = default;
};

using RadialForm = std::vector<RadialTerm>;

/// Rewrites canonical basis elements into radial-derivative form using
/// d_{2k} = (-1)^k A_k D^{2k} delta, v_{2k+1} = (-1)^k A_k D^{2k+1} delta,
/// sv_{2k} = (-1)^k A_k s[2k], sd_{2k+1} = -(-1)^k A_k s[2k+1].
RadialForm to_radial(const GeneralizedFunction& g);

/// Inverse of to_radial. Throws DomainError on a label/order parity mismatch
/// and SpaceMismatch when labels from both spaces are mixed.
GeneralizedFunction from_radial(const RadialForm& form);

GeneralizedFunction radial(RadialLabel label, unsigned order, const DimScalar& c = DimScalar(1));

// ---------------------------------------------------------------- classical operators

Distribution apply_dirac(const Distribution& t);
Distribution apply_laplace(const Distribution& t);
Distribution apply_euler(const Distribution& t);
/// Gamma (or Laplace-Beltrami when `beltrami`); only defined on scalar terms.
Distribution apply_gamma(const Distribution& t, bool beltrami = false);
Distribution mul_x(const Distribution& t);
Distribution mul_x_pow(const Distribution& t, unsigned p);
Distribution apply_omega_dr(const Distribution& t);
Distribution apply_dr2(const Distribution& t);
/// (1/r) dr; even-index terms only.
Distribution apply_inv_r_dr(const Distribution& t);
/// Division by x with the rotation-invariant choice of the arbitrary term.
Distribution div_x(const Distribution& t);
/// 1/r^power; power 1 on any distribution, odd power > 1 only on c * delta.
SignumDistribution div_r(const Distribution& t, unsigned power);

// ---------------------------------------------------------------- space transitions

GeneralizedFunction act_r(const GeneralizedFunction& g);
GeneralizedFunction act_dr(const GeneralizedFunction& g);
GeneralizedFunction act_omega(const GeneralizedFunction& g);

// ---------------------------------------------------------------- operator dispatch

enum class Operator { R, Dr, Omega, X, Dirac, Laplace, Euler, Gamma, LaplaceBeltrami, InvR, InvX, InvRDr };

const char* to_string(Operator op);
std::optional<Operator> operator_from_name(std::string_view name);
bool allows_power(Operator op);

/// Applies op^power. Even powers of r, dr and w on a distribution resolve to
/// the classical composites (r^2 = -x^2, dr^2, w^2 = -1) before any remaining
/// single transition is applied.
GeneralizedFunction apply(Operator op, const GeneralizedFunction& g, unsigned power = 1);

// ---------------------------------------------------------------- r^a dr^b products

enum class Prop35Family { I, II, III, IV };

const char* to_string(Prop35Family f);

struct Prop35Entry {
  DimScalar coefficient;
  std::optional<unsigned> target;  // D-power; empty when the product vanishes

  GeneralizedFunction as_distribution() const;
};

/// Closed-form coefficients for
///   (i)   r^{2l} dr^{2k} delta          (ii)  w r^{2l+1} dr^{2k} delta
///   (iii) w r^{2l} dr^{2k+1} delta      (iv)  r^{2l+1} dr^{2k+1} delta
/// Requires k >= l (DomainError otherwise).
Prop35Entry prop35_coefficient(Prop35Family family, unsigned k, unsigned l);

/// The same product assembled from the operator rules, step by step.
GeneralizedFunction prop35_composed(Prop35Family family, unsigned k, unsigned l);

}  // namespace signumcalc
