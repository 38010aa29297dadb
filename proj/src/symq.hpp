#pragma once

// Exact coefficient arithmetic: GMP-backed rationals and rational functions
// of the symbolic dimension m.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace signumcalc {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q".
  std::string to_string() const;

 private:
  mpq_class value_;
};

Rational factorial(unsigned n);
Rational power_of_two(unsigned n);

/// Rational function num(m)/den(m) with integer polynomial numerator and
/// denominator, kept in canonical form: gcd(num, den) = 1, the integer content
/// of the pair is 1, and den has a positive leading coefficient. Coefficient
/// vectors are dense, indexed by degree, without trailing zeros.
class DimScalar {
 public:
  using Coefficients = std::vector<mpz_class>;

  DimScalar() : den_{mpz_class(1)} {}
  DimScalar(long value);  // NOLINT(google-explicit-constructor)
  DimScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  DimScalar(Coefficients num, Coefficients den);

  /// The indeterminate m.
  static DimScalar m();
  /// m + c.
  static DimScalar m_plus(long c);

  const Coefficients& numerator() const { return num_; }
  const Coefficients& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
  /// Value of a constant scalar; throws DomainError if m appears.
  Rational constant_value() const;

  /// Exact value at m = m0; throws PoleAtDimension when den(m0) = 0.
  Rational eval(long m0) const;

  DimScalar& operator+=(const DimScalar& o);
  DimScalar& operator-=(const DimScalar& o);
  DimScalar& operator*=(const DimScalar& o);
  DimScalar& operator/=(const DimScalar& o);

  friend DimScalar operator+(DimScalar a, const DimScalar& b) { return a += b; }
  friend DimScalar operator-(DimScalar a, const DimScalar& b) { return a -= b; }
  friend DimScalar operator*(DimScalar a, const DimScalar& b) { return a *= b; }
  friend DimScalar operator/(DimScalar a, const DimScalar& b) { return a /= b; }
  DimScalar operator-() const;

  friend bool operator==(const DimScalar& a, const DimScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Factored rendering, e.g. "(m+1)*(m+3)/8", "-1/(m*(m+1))", "2*m".
  std::string to_string() const;

 private:
  void normalize();

  Coefficients num_;
  Coefficients den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
DimScalar dimscalar_arith(const DimScalar& a, const DimScalar& b, ArithOp op);

inline Rational dim_eval(const DimScalar& f, long m0) { return f.eval(m0); }

/// A_k = (m+1)(m+3)...(m+2k-1) / (2^k k!).
DimScalar odd_rising_coeff(unsigned k);

/// (m+start)(m+start+step)... with `count` factors; 1 when count = 0.
DimScalar m_product(long start, long step, unsigned count);

}  // namespace signumcalc
