#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include <json.hpp>

namespace signumcalc {

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(unsigned m) : m_(m) {
  if (m == 0) throw Error(ErrorCode::DomainError, "polynomial dimension must be positive");
}

MultiPoly MultiPoly::constant(unsigned m, const Rational& c) {
  MultiPoly p(m);
  p.add_term(MultiIndex(m, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned m, unsigned i) {
  MultiIndex alpha(m, 0);
  if (i >= m) throw Error(ErrorCode::DomainError, "variable index out of range");
  alpha[i] = 1;
  MultiPoly p(m);
  p.add_term(alpha, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(MultiIndex alpha, const Rational& c) {
  MultiPoly p(static_cast<unsigned>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

void MultiPoly::check_index(const MultiIndex& alpha) const {
  if (alpha.size() != m_)
    throw Error(ErrorCode::DomainError, "multi-index of length " + std::to_string(alpha.size()) +
                                            " in dimension " + std::to_string(m_));
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [alpha, c] : terms_) {
    int g = 0;
    for (unsigned a : alpha) g += static_cast<int>(a);
    d = std::max(d, g);
  }
  return d;
}

void MultiPoly::add_term(const MultiIndex& alpha, const Rational& c) {
  check_index(alpha);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::value_at_zero() const {
  auto it = terms_.find(MultiIndex(m_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::derivative(unsigned j) const {
  MultiPoly out(m_);
  for (const auto& [alpha, c] : terms_) {
    if (alpha[j] == 0) continue;
    MultiIndex beta = alpha;
    --beta[j];
    out.add_term(beta, c * Rational(static_cast<long>(alpha[j])));
  }
  return out;
}

MultiPoly MultiPoly::laplacian() const {
  MultiPoly out(m_);
  for (const auto& [alpha, c] : terms_) {
    for (unsigned j = 0; j < m_; ++j) {
      if (alpha[j] < 2) continue;
      MultiIndex beta = alpha;
      beta[j] -= 2;
      out.add_term(beta, c * Rational(static_cast<long>(alpha[j]) * (alpha[j] - 1)));
    }
  }
  return out;
}

MultiPoly MultiPoly::times_variable(unsigned i) const {
  MultiPoly out(m_);
  for (const auto& [alpha, c] : terms_) {
    MultiIndex beta = alpha;
    ++beta[i];
    out.add_term(beta, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, c] : terms_) c *= s;
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto total = [](const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0u); };
  std::stable_sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
    unsigned dx = total(x->first), dy = total(y->first);
    return dx != dy ? dx > dy : x->first > y->first;
  });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [alpha, c] = *term;
    Rational a = c.abs();
    if (first) out += c.sign() < 0 ? "-" : "";
    else out += c.sign() < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (unsigned j = 0; j < m_; ++j) {
      if (alpha[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if (alpha[j] > 1) mono += "^" + std::to_string(alpha[j]);
    }
    if (mono.empty()) out += a.to_string();
    else if (a == Rational(1)) out += mono;
    else out += a.to_string() + "*" + mono;
  }
  return out;
}

std::string MultiPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [alpha, c] : terms_) arr.push_back({alpha, c.to_string()});
  return arr.dump();
}

// ---------------------------------------------------------------- PairingValue

PairingValue PairingValue::scalar(const Rational& s) {
  PairingValue v;
  v.scalar_ = s;
  return v;
}

PairingValue PairingValue::vector(std::vector<Rational> components) {
  PairingValue v;
  v.vector_ = std::move(components);
  return v;
}

bool PairingValue::is_zero() const {
  if (scalar_ && !scalar_->is_zero()) return false;
  if (vector_)
    for (const auto& c : *vector_)
      if (!c.is_zero()) return false;
  return true;
}

const Rational& PairingValue::as_scalar() const {
  if (!scalar_ || vector_) throw Error(ErrorCode::KindMismatch, "pairing value is not a scalar: " + to_string());
  return *scalar_;
}

const std::vector<Rational>& PairingValue::as_vector() const {
  if (!vector_ || scalar_) throw Error(ErrorCode::KindMismatch, "pairing value is not a vector: " + to_string());
  return *vector_;
}

PairingValue& PairingValue::operator+=(const PairingValue& o) {
  if (o.scalar_) scalar_ = scalar_.value_or(Rational(0)) + *o.scalar_;
  if (o.vector_) {
    if (!vector_) {
      vector_ = o.vector_;
    } else {
      if (vector_->size() != o.vector_->size())
        throw Error(ErrorCode::KindMismatch, "vector pairing values of different dimension");
      for (std::size_t i = 0; i < vector_->size(); ++i) (*vector_)[i] += (*o.vector_)[i];
    }
  }
  return *this;
}

PairingValue& PairingValue::operator*=(const Rational& s) {
  if (scalar_) *scalar_ *= s;
  if (vector_)
    for (auto& c : *vector_) c *= s;
  return *this;
}

bool operator==(const PairingValue& a, const PairingValue& b) {
  if (a.scalar_part() != b.scalar_part()) return false;
  const auto& va = a.vector_;
  const auto& vb = b.vector_;
  auto all_zero = [](const std::vector<Rational>& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  if (va && vb) return *va == *vb;
  if (va) return all_zero(*va);
  if (vb) return all_zero(*vb);
  return true;
}

std::string PairingValue::to_string() const {
  std::string vec;
  if (vector_) {
    vec = "(";
    for (std::size_t i = 0; i < vector_->size(); ++i) {
      if (i) vec += ", ";
      vec += (*vector_)[i].to_string();
    }
    vec += ")";
  }
  if (scalar_ && vector_) return scalar_->to_string() + " + " + vec;
  if (scalar_) return scalar_->to_string();
  if (vector_) return vec;
  return "0";
}

// ---------------------------------------------------------------- RadialPoly

RadialPoly::RadialPoly(Kind kind, unsigned components)
    : kind_(kind), components_(kind == Kind::Scalar ? 1 : components) {}

void RadialPoly::add(unsigned power, unsigned component, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, std::vector<Rational>(components_, Rational(0)));
  it->second.at(component) += c;
  for (const auto& x : it->second)
    if (!x.is_zero()) return;
  terms_.erase(it);
}

std::vector<Rational> RadialPoly::coefficient(unsigned power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? std::vector<Rational>(components_, Rational(0)) : it->second;
}

// ---------------------------------------------------------------- derivatives at 0

VectorPoly dirac_apply(const MultiPoly& phi) {
  VectorPoly out;
  for (unsigned j = 0; j < phi.dimension(); ++j) out.push_back(phi.derivative(j));
  return out;
}

PairingValue dirac_power_at_zero(const MultiPoly& phi, unsigned n) {
  MultiPoly p = phi;
  for (unsigned i = 0; i < n / 2 && !p.is_zero(); ++i) p = p.laplacian() * Rational(-1);
  if (n % 2 == 0) return PairingValue::scalar(p.value_at_zero());
  std::vector<Rational> v;
  for (const auto& c : dirac_apply(p)) v.push_back(c.value_at_zero());
  return PairingValue::vector(std::move(v));
}

// ---------------------------------------------------------------- spherical means

Rational sphere_moment(const MultiIndex& alpha, long m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "sphere moments need m >= 2, got m = " + std::to_string(m));
  Rational num(1);
  unsigned total = 0;
  for (unsigned a : alpha) {
    if (a % 2 == 1) return Rational(0);
    for (long j = static_cast<long>(a) - 1; j > 1; j -= 2) num *= Rational(j);
    total += a;
  }
  Rational den(1);
  for (unsigned j = 0; j < total / 2; ++j) den *= Rational(m + 2 * static_cast<long>(j));
  return num / den;
}

RadialPoly spherical_mean0(const MultiPoly& phi) {
  RadialPoly out(Kind::Scalar, 1);
  for (const auto& [alpha, c] : phi.terms()) {
    unsigned g = 0;
    for (unsigned a : alpha) g += a;
    out.add(g, 0, c * sphere_moment(alpha, phi.dimension()));
  }
  return out;
}

RadialPoly spherical_mean1(const MultiPoly& phi) {
  const unsigned m = phi.dimension();
  RadialPoly out(Kind::Vector, m);
  for (const auto& [alpha, c] : phi.terms()) {
    unsigned g = 0;
    for (unsigned a : alpha) g += a;
    for (unsigned i = 0; i < m; ++i) {
      MultiIndex beta = alpha;
      ++beta[i];
      out.add(g, i, c * sphere_moment(beta, m));
    }
  }
  return out;
}

PairingValue radial_deriv_at_zero(const RadialPoly& p, unsigned n) {
  std::vector<Rational> c = p.coefficient(n);
  for (auto& x : c) x *= factorial(n);
  if (p.kind() == Kind::Scalar) return PairingValue::scalar(c.front());
  return PairingValue::vector(std::move(c));
}

// ---------------------------------------------------------------- generation

MultiPoly random_poly(unsigned m, unsigned max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MultiPoly p(m);
  for (unsigned g = 0; g <= max_degree; ++g) {
    unsigned count = 1 + static_cast<unsigned>(rng() % 4);
    for (unsigned t = 0; t < count; ++t) {
      MultiIndex alpha(m, 0);
      for (unsigned u = 0; u < g; ++u) ++alpha[rng() % m];
      long c = static_cast<long>(rng() % 19) - 9;
      p.add_term(alpha, Rational(c));
    }
  }
  return p;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, unsigned m) : text_(text), m_(m) {}

  MultiPoly parse() {
    MultiPoly out(m_);
    skip();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    monomial(out, sign);
    while (true) {
      skip();
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      else break;
      monomial(out, sign);
    }
    skip();
    if (pos_ != text_.size()) fail({"+", "-", "*", "end of input"}, "unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) {
    throw ParseError(pos_, std::move(expected), what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    if (!at_digit()) fail({"integer"}, "expected an integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > 64) {
      pos_ = start;
      fail({"integer"}, "integer literal too long");
    }
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned small(const char* what, unsigned limit) {
    std::size_t start = pos_;
    mpz_class v = integer();
    if (v > limit) {
      pos_ = start;
      fail({what}, std::string(what) + " out of range");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  void factor(Rational& coeff, MultiIndex& alpha) {
    skip();
    if (at_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail({"non-zero integer"}, "zero denominator");
        }
      }
      coeff *= Rational(num, den);
      return;
    }
    std::size_t at = pos_;
    if (accept('x')) {
      unsigned idx = small("variable index", 1u << 16);
      if (idx == 0 || idx > m_) {
        pos_ = at;
        fail({"x1..x" + std::to_string(m_)}, "variable x" + std::to_string(idx) + " outside dimension " +
                                                 std::to_string(m_));
      }
      unsigned power = 1;
      if (accept('^')) power = small("exponent", 64);
      alpha[idx - 1] += power;
      return;
    }
    fail({"integer", "variable"}, "expected a coefficient or a variable");
  }

  void monomial(MultiPoly& out, int sign) {
    Rational coeff(sign);
    MultiIndex alpha(m_, 0);
    factor(coeff, alpha);
    while (accept('*')) factor(coeff, alpha);
    out.add_term(alpha, coeff);
  }

  std::string_view text_;
  unsigned m_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, unsigned m) { return PolyParser(text, m).parse(); }

MultiPoly poly_from_json(std::string_view text, unsigned m) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, {"JSON"}, "invalid polynomial JSON");
  }
  if (!j.is_array()) throw ParseError(0, {"array"}, "polynomial JSON must be an array of terms");
  MultiPoly p(m);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || !term[1].is_string())
      throw ParseError(0, {"[[alpha...], \"p/q\"]"}, "malformed polynomial term");
    MultiIndex alpha;
    for (const auto& a : term[0]) {
      if (!a.is_number_unsigned()) throw ParseError(0, {"exponent"}, "exponents must be non-negative integers");
      alpha.push_back(a.get<unsigned>());
    }
    if (alpha.size() != m) throw ParseError(0, {"multi-index of length " + std::to_string(m)}, "wrong multi-index length");
    Rational c;
    try {
      c = Rational::parse(term[1].get<std::string>());
    } catch (const Error& e) {
      throw ParseError(0, {"\"p/q\""}, e.what());
    }
    p.add_term(alpha, c);
  }
  return p;
}

}  // namespace signumcalc
