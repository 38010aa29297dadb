#include "symq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace signumcalc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtDimension: return "PoleAtDimension";
    case ErrorCode::UnsupportedAction: return "UnsupportedAction";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message, ErrorCode code)
    : Error(code, message), offset_(offset), expected_(std::move(expected)) {}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division of a rational by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::InvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  };
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    if (s.empty()) throw bad();
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text, true), 1);
  return Rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, 1);
}

Rational power_of_two(unsigned n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  return Rational(p, 1);
}

// ---------------------------------------------------------------- polynomials in m

namespace {

using IntPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <typename P>
void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

IntPoly negate(IntPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

QPoly to_q(const IntPoly& p) { return QPoly(p.begin(), p.end()); }

// Remainder of a by b over Q (b nonzero).
QPoly rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Exact quotient a / b over Q.
QPoly quot(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

mpz_class eval(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

}  // namespace

// ---------------------------------------------------------------- DimScalar

DimScalar::DimScalar(long value) : num_{mpz_class(value)}, den_{mpz_class(1)} { trim(num_); }

DimScalar::DimScalar(const Rational& value) : num_{value.numerator()}, den_{value.denominator()} {
  trim(num_);
}

DimScalar::DimScalar(Coefficients num, Coefficients den) : num_(std::move(num)), den_(std::move(den)) {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

DimScalar DimScalar::m() { return DimScalar({0, 1}, {1}); }

DimScalar DimScalar::m_plus(long c) { return DimScalar({mpz_class(c), 1}, {1}); }

void DimScalar::normalize() {
  if (num_.empty()) {
    den_ = {1};
    return;
  }
  if (den_.size() > 1 && num_.size() > 1) {
    QPoly g = gcd(to_q(num_), to_q(den_));
    if (g.size() > 1) {
      QPoly n = quot(to_q(num_), g);
      QPoly d = quot(to_q(den_), g);
      mpz_class l = 1;
      for (const auto& c : n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      for (const auto& c : d) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      num_.assign(n.size(), 0);
      den_.assign(d.size(), 0);
      for (std::size_t i = 0; i < n.size(); ++i) num_[i] = mpq_class(n[i] * l).get_num();
      for (std::size_t i = 0; i < d.size(); ++i) den_[i] = mpq_class(d[i] * l).get_num();
    }
  }
  mpz_class g = content(num_);
  mpz_class gd = content(den_);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
  if (den_.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : den_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

Rational DimScalar::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::DomainError, "scalar depends on m: " + to_string());
  return num_.empty() ? Rational(0) : Rational(num_[0], den_[0]);
}

Rational DimScalar::eval(long m0) const {
  mpz_class x(m0);
  mpz_class d = signumcalc::eval(den_, x);
  if (d == 0)
    throw Error(ErrorCode::PoleAtDimension,
                "denominator of " + to_string() + " vanishes at m = " + std::to_string(m0));
  return Rational(signumcalc::eval(num_, x), d);
}

DimScalar& DimScalar::operator+=(const DimScalar& o) {
  if (den_ == o.den_) {
    num_ = add(num_, o.num_);
  } else {
    num_ = add(mul(num_, o.den_), mul(o.num_, den_));
    den_ = mul(den_, o.den_);
  }
  normalize();
  return *this;
}

DimScalar& DimScalar::operator-=(const DimScalar& o) { return *this += -o; }

DimScalar& DimScalar::operator*=(const DimScalar& o) {
  num_ = mul(num_, o.num_);
  den_ = mul(den_, o.den_);
  normalize();
  return *this;
}

DimScalar& DimScalar::operator/=(const DimScalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  num_ = mul(num_, o.den_);
  den_ = mul(den_, o.num_);
  normalize();
  return *this;
}

DimScalar DimScalar::operator-() const {
  DimScalar r = *this;
  r.num_ = negate(r.num_);
  return r;
}

namespace {

struct Factored {
  mpz_class content;                 // positive
  std::map<long, unsigned> linear;   // c -> multiplicity of (m + c)
  IntPoly rest;                      // primitive, positive leading coefficient
};

// Splits off integer roots; rule-generated scalars factor completely into
// (m + c) terms with small c, anything else stays in `rest`.
Factored factor(IntPoly p) {
  Factored f;
  f.content = content(p);
  if (p.back() < 0) f.content = -f.content;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), f.content.get_mpz_t());
  f.content = abs(f.content);
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++f.linear[0];
  }
  constexpr long kSearch = 512;
  for (long c = -kSearch; c <= kSearch && p.size() > 1; ++c) {
    if (c == 0) continue;
    while (p.size() > 1 && mpz_divisible_ui_p(p[0].get_mpz_t(), static_cast<unsigned long>(std::labs(c))) &&
           eval(p, mpz_class(-c)) == 0) {
      // synthetic division by (m + c)
      std::size_t n = p.size() - 1;
      IntPoly q(n);
      q[n - 1] = p[n];
      for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = p[i] - c * q[i];
      p = std::move(q);
      ++f.linear[c];
    }
  }
  f.rest = std::move(p);
  return f;
}

std::string render_expanded(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    bool unit = (a == 1 && i > 0);
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << '*';
      os << 'm';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::vector<std::string> render_items(const IntPoly& p) {
  Factored f = factor(p);
  std::vector<std::string> items;
  bool trivial = f.linear.empty() && f.rest.size() <= 1;
  if (f.content != 1 || trivial) items.push_back(f.content.get_str());
  for (const auto& [c, mult] : f.linear) {
    std::string s;
    if (c == 0) s = "m";
    else s = "(m" + std::string(c > 0 ? "+" : "-") + std::to_string(std::labs(c)) + ")";
    if (mult > 1) s += "^" + std::to_string(mult);
    items.push_back(s);
  }
  if (f.rest.size() > 1) items.push_back("(" + render_expanded(f.rest) + ")");
  return items;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

}  // namespace

std::string DimScalar::to_string() const {
  if (num_.empty()) return "0";
  std::string out = num_.back() < 0 ? "-" : "";
  out += join(render_items(num_.back() < 0 ? negate(num_) : num_), "*");
  auto den_items = render_items(den_);
  if (den_items.size() == 1 && den_items[0] == "1") return out;
  out += "/";
  out += den_items.size() == 1 ? den_items[0] : "(" + join(den_items, "*") + ")";
  return out;
}

DimScalar dimscalar_arith(const DimScalar& a, const DimScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

DimScalar m_product(long start, long step, unsigned count) {
  DimScalar r(1);
  for (unsigned i = 0; i < count; ++i) r *= DimScalar::m_plus(start + step * static_cast<long>(i));
  return r;
}

DimScalar odd_rising_coeff(unsigned k) {
  return m_product(1, 2, k) / DimScalar(power_of_two(k) * factorial(k));
}

}  // namespace signumcalc
