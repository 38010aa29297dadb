#include "kernel.hpp"

#include <array>
#include <utility>

namespace signumcalc {

namespace {

DimScalar sign_power(unsigned k) { return DimScalar(k % 2 == 0 ? 1 : -1); }

Error unsupported(const std::string& what) { return Error(ErrorCode::UnsupportedAction, what); }

}  // namespace

const char* to_string(Space space) { return space == Space::Dist ? "distribution" : "signumdistribution"; }

// ---------------------------------------------------------------- GeneralizedFunction

GeneralizedFunction GeneralizedFunction::zero(Space space) {
  return space == Space::Dist ? GeneralizedFunction(Distribution{}) : GeneralizedFunction(SignumDistribution{});
}

const Distribution& GeneralizedFunction::dist() const {
  if (auto* d = std::get_if<Distribution>(&value_)) return *d;
  throw Error(ErrorCode::SpaceMismatch, "expected a distribution, got a signumdistribution");
}

const SignumDistribution& GeneralizedFunction::sign() const {
  if (auto* s = std::get_if<SignumDistribution>(&value_)) return *s;
  throw Error(ErrorCode::SpaceMismatch, "expected a signumdistribution, got a distribution");
}

const std::map<unsigned, DimScalar>& GeneralizedFunction::terms() const {
  return std::visit([](const auto& v) -> const std::map<unsigned, DimScalar>& { return v.terms(); }, value_);
}

GeneralizedFunction& GeneralizedFunction::operator+=(const GeneralizedFunction& o) {
  if (space() != o.space())
    throw Error(ErrorCode::SpaceMismatch, "cannot add a distribution and a signumdistribution");
  if (is_dist()) std::get<Distribution>(value_) += o.dist();
  else std::get<SignumDistribution>(value_) += o.sign();
  return *this;
}

GeneralizedFunction& GeneralizedFunction::operator*=(const DimScalar& s) {
  std::visit([&](auto& v) { v *= s; }, value_);
  return *this;
}

bool is_equal(const GeneralizedFunction& a, const GeneralizedFunction& b) { return a == b; }

GeneralizedFunction specialize(const GeneralizedFunction& g, long m0) {
  GeneralizedFunction out = GeneralizedFunction::zero(g.space());
  for (const auto& [n, c] : g.terms()) {
    if (g.is_dist()) out += dirac_basis(n, c.eval(m0));
    else out += signum_basis(n, c.eval(m0));
  }
  return out;
}

// ---------------------------------------------------------------- radial view

const char* to_string(RadialLabel label) {
  switch (label) {
    case RadialLabel::D: return "d";
    case RadialLabel::V: return "v";
    case RadialLabel::SD: return "sd";
    case RadialLabel::SV: return "sv";
  }
  return "?";
}

Space space_of(RadialLabel label) {
  return (label == RadialLabel::D || label == RadialLabel::V) ? Space::Dist : Space::Sign;
}

namespace {

bool order_matches(RadialLabel label, unsigned n) {
  bool even = n % 2 == 0;
  switch (label) {
    case RadialLabel::D:
    case RadialLabel::SV: return even;
    case RadialLabel::V:
    case RadialLabel::SD: return !even;
  }
  return false;
}

RadialLabel label_for(Space space, unsigned n) {
  bool even = n % 2 == 0;
  if (space == Space::Dist) return even ? RadialLabel::D : RadialLabel::V;
  return even ? RadialLabel::SV : RadialLabel::SD;
}

// The radial element of a given label and order equals factor * basis[order].
DimScalar radial_factor(RadialLabel label, unsigned n) {
  unsigned k = n / 2;
  DimScalar f = sign_power(k) * odd_rising_coeff(k);
  return label == RadialLabel::SD ? -f : f;
}

}  // namespace

RadialForm to_radial(const GeneralizedFunction& g) {
  RadialForm form;
  for (const auto& [n, c] : g.terms()) {
    RadialLabel label = label_for(g.space(), n);
    form.push_back({label, n, c / radial_factor(label, n)});
  }
  return form;
}

GeneralizedFunction from_radial(const RadialForm& form) {
  if (form.empty()) return GeneralizedFunction::zero(Space::Dist);
  Space space = space_of(form.front().label);
  GeneralizedFunction out = GeneralizedFunction::zero(space);
  for (const auto& t : form) {
    if (!order_matches(t.label, t.order))
      throw Error(ErrorCode::DomainError, std::string("radial label ") + to_string(t.label) +
                                              " cannot carry order " + std::to_string(t.order));
    if (space_of(t.label) != space)
      throw Error(ErrorCode::SpaceMismatch, "radial form mixes distribution and signum labels");
    DimScalar c = t.coefficient * radial_factor(t.label, t.order);
    if (space == Space::Dist) out += dirac_basis(t.order, c);
    else out += signum_basis(t.order, c);
  }
  return out;
}

GeneralizedFunction radial(RadialLabel label, unsigned order, const DimScalar& c) {
  return from_radial({{label, order, c}});
}

namespace {

// Term-wise rewrite in radial form; `rule` maps one radial term to zero or one
// radial term and the output space is fixed by `target`.
template <typename Rule>
GeneralizedFunction rewrite_radial(const GeneralizedFunction& g, Space target, Rule rule) {
  RadialForm out;
  for (const auto& term : to_radial(g)) {
    std::optional<RadialTerm> r = rule(term);
    if (r && !r->coefficient.is_zero()) out.push_back(*r);
  }
  if (out.empty()) return GeneralizedFunction::zero(target);
  return from_radial(out);
}

RadialLabel across(RadialLabel label) {
  switch (label) {
    case RadialLabel::D: return RadialLabel::SD;
    case RadialLabel::V: return RadialLabel::SV;
    case RadialLabel::SD: return RadialLabel::D;
    case RadialLabel::SV: return RadialLabel::V;
  }
  return label;
}

Space other(Space s) { return s == Space::Dist ? Space::Sign : Space::Dist; }

}  // namespace

// ---------------------------------------------------------------- classical operators

Distribution apply_dirac(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) out.add_term(n + 1, c);
  return out;
}

Distribution apply_laplace(const Distribution& t) { return -apply_dirac(apply_dirac(t)); }

Distribution apply_euler(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) out.add_term(n, -c * DimScalar::m_plus(n));
  return out;
}

Distribution apply_gamma(const Distribution& t, bool beltrami) {
  for (const auto& [n, c] : t.terms())
    if (n % 2 == 1)
      throw unsupported(std::string(beltrami ? "Laplace-Beltrami" : "Gamma") +
                        " is only defined on scalar (even-index) terms, got D^" + std::to_string(n) + " delta");
  return {};
}

Distribution mul_x(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) {
    if (n == 0) continue;  // x delta = 0
    if (n % 2 == 0) out.add_term(n - 1, c * DimScalar(static_cast<long>(n)));
    else out.add_term(n - 1, c * DimScalar::m_plus(n - 1));
  }
  return out;
}

Distribution mul_x_pow(const Distribution& t, unsigned p) {
  Distribution out = t;
  for (unsigned i = 0; i < p && !out.is_zero(); ++i) out = mul_x(out);
  return out;
}

Distribution apply_omega_dr(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) {
    if (n % 2 == 0) out.add_term(n + 1, c);
    else out.add_term(n + 1, c * DimScalar::m_plus(n) / DimScalar(static_cast<long>(n + 1)));
  }
  return out;
}

Distribution apply_dr2(const Distribution& t) {
  return rewrite_radial(t, Space::Dist, [](const RadialTerm& term) -> std::optional<RadialTerm> {
           return RadialTerm{term.label, term.order + 2, term.coefficient};
         })
      .dist();
}

Distribution apply_inv_r_dr(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) {
    if (n % 2 == 1)
      throw unsupported("(1/r) dr is not defined on vector-valued terms, got D^" + std::to_string(n) + " delta");
    out.add_term(n + 2, c / DimScalar(static_cast<long>(n + 2)));
  }
  return out;
}

Distribution div_x(const Distribution& t) {
  Distribution out;
  for (const auto& [n, c] : t.terms()) {
    if (n % 2 == 0) out.add_term(n + 1, c / DimScalar::m_plus(n));
    else out.add_term(n + 1, c / DimScalar(static_cast<long>(n + 1)));
  }
  return out;
}

SignumDistribution div_r(const Distribution& t, unsigned power) {
  if (power % 2 == 0) throw unsupported("1/r^" + std::to_string(power) + " is only defined for odd powers");
  if (power == 1) {
    // d_n -> -1/(m+n) sd_{n+1}, v_n -> -1/(m+n) sv_{n+1}
    return rewrite_radial(t, Space::Sign, [](const RadialTerm& term) -> std::optional<RadialTerm> {
             return RadialTerm{across(term.label), term.order + 1,
                               -term.coefficient / DimScalar::m_plus(term.order)};
           })
        .sign();
  }
  if (t.is_zero()) return {};
  if (t.terms().size() != 1 || t.terms().begin()->first != 0)
    throw unsupported("1/r^" + std::to_string(power) + " is only defined on multiples of delta");
  // 1/r^{2k+1} delta = -(m-1)!/(m+2k)! dr^{2k+1} delta
  const DimScalar& c = t.terms().begin()->second;
  DimScalar coeff = -c / m_product(0, 1, power);
  return radial(RadialLabel::SD, power, coeff).sign();
}

// ---------------------------------------------------------------- space transitions

GeneralizedFunction act_r(const GeneralizedFunction& g) {
  // r (w dr^{2k+1}) delta = -(m+2k) (w dr^{2k}) delta,   r dr^{2k} delta = -(m+2k-1) dr^{2k-1} delta,
  // r dr^{2k+1} delta = -(m+2k) dr^{2k} delta,           r (w dr^{2k}) delta = -(m+2k-1) (w dr^{2k-1}) delta;
  // order 0 (delta, w delta) maps to zero.
  return rewrite_radial(g, other(g.space()), [](const RadialTerm& term) -> std::optional<RadialTerm> {
    if (term.order == 0) return std::nullopt;
    return RadialTerm{across(term.label), term.order - 1, -term.coefficient * DimScalar::m_plus(term.order - 1)};
  });
}

GeneralizedFunction act_dr(const GeneralizedFunction& g) {
  return rewrite_radial(g, other(g.space()), [](const RadialTerm& term) -> std::optional<RadialTerm> {
    return RadialTerm{across(term.label), term.order + 1, term.coefficient};
  });
}

GeneralizedFunction act_omega(const GeneralizedFunction& g) {
  return rewrite_radial(g, other(g.space()), [](const RadialTerm& term) -> std::optional<RadialTerm> {
    switch (term.label) {
      case RadialLabel::D: return RadialTerm{RadialLabel::SV, term.order, term.coefficient};
      case RadialLabel::V: return RadialTerm{RadialLabel::SD, term.order, -term.coefficient};
      case RadialLabel::SV: return RadialTerm{RadialLabel::D, term.order, -term.coefficient};
      case RadialLabel::SD: return RadialTerm{RadialLabel::V, term.order, term.coefficient};
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------- operator dispatch

namespace {

struct OperatorName {
  Operator op;
  const char* name;
  bool power;
};

constexpr std::array<OperatorName, 12> kOperators{{
    {Operator::R, "r", true},
    {Operator::Dr, "dr", true},
    {Operator::Omega, "w", true},
    {Operator::X, "x", true},
    {Operator::Dirac, "D", true},
    {Operator::Laplace, "L", true},
    {Operator::Euler, "E", false},
    {Operator::Gamma, "G", false},
    {Operator::LaplaceBeltrami, "LB", false},
    {Operator::InvR, "inv_r", true},
    {Operator::InvX, "inv_x", false},
    {Operator::InvRDr, "inv_r_dr", true},
}};

const Distribution& require_dist(Operator op, const GeneralizedFunction& g) {
  if (!g.is_dist())
    throw unsupported(std::string("operator '") + to_string(op) + "' is not defined on signumdistributions");
  return g.dist();
}

template <typename F>
Distribution iterate(const Distribution& t, unsigned times, F f) {
  Distribution out = t;
  for (unsigned i = 0; i < times; ++i) out = f(out);
  return out;
}

template <typename F>
GeneralizedFunction iterate(const GeneralizedFunction& g, unsigned times, F f) {
  GeneralizedFunction out = g;
  for (unsigned i = 0; i < times; ++i) out = f(out);
  return out;
}

}  // namespace

const char* to_string(Operator op) {
  for (const auto& o : kOperators)
    if (o.op == op) return o.name;
  return "?";
}

std::optional<Operator> operator_from_name(std::string_view name) {
  for (const auto& o : kOperators)
    if (name == o.name) return o.op;
  return std::nullopt;
}

bool allows_power(Operator op) {
  for (const auto& o : kOperators)
    if (o.op == op) return o.power;
  return false;
}

GeneralizedFunction apply(Operator op, const GeneralizedFunction& g, unsigned power) {
  if (power == 0) return g;
  if (power > 1 && !allows_power(op))
    throw Error(ErrorCode::InvalidArgument, std::string("operator '") + to_string(op) + "' takes no power");
  unsigned half = power / 2;
  bool odd = power % 2 == 1;
  switch (op) {
    case Operator::R:
      if (!g.is_dist()) return iterate(g, power, act_r);
      {
        GeneralizedFunction t = mul_x_pow(g.dist(), 2 * half) * sign_power(half);  // r^2 = -x^2
        return odd ? act_r(t) : t;
      }
    case Operator::Dr:
      if (!g.is_dist()) return iterate(g, power, act_dr);
      {
        GeneralizedFunction t = iterate(g.dist(), half, apply_dr2);
        return odd ? act_dr(t) : t;
      }
    case Operator::Omega: {
      GeneralizedFunction t = g * sign_power(half);  // w^2 = -1
      return odd ? act_omega(t) : t;
    }
    case Operator::X: return mul_x_pow(require_dist(op, g), power);
    case Operator::Dirac: return iterate(require_dist(op, g), power, apply_dirac);
    case Operator::Laplace: return iterate(require_dist(op, g), power, apply_laplace);
    case Operator::Euler: return apply_euler(require_dist(op, g));
    case Operator::Gamma: return apply_gamma(require_dist(op, g), false);
    case Operator::LaplaceBeltrami: return apply_gamma(require_dist(op, g), true);
    case Operator::InvR: return div_r(require_dist(op, g), power);
    case Operator::InvX: return div_x(require_dist(op, g));
    case Operator::InvRDr: return iterate(require_dist(op, g), power, apply_inv_r_dr);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operator");
}

// ---------------------------------------------------------------- r^a dr^b products

const char* to_string(Prop35Family f) {
  switch (f) {
    case Prop35Family::I: return "i";
    case Prop35Family::II: return "ii";
    case Prop35Family::III: return "iii";
    case Prop35Family::IV: return "iv";
  }
  return "?";
}

GeneralizedFunction Prop35Entry::as_distribution() const {
  if (!target || coefficient.is_zero()) return Distribution{};
  return dirac_basis(*target, coefficient);
}

Prop35Entry prop35_coefficient(Prop35Family family, unsigned k, unsigned l) {
  if (k < l)
    throw Error(ErrorCode::DomainError,
                "r^a dr^b table requires k >= l (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  // (m+1)(m+3)...(m+2k-1)
  const DimScalar odd = m_product(1, 2, k);
  const long top = 2 * static_cast<long>(k);
  auto inv_fact = [](unsigned j) { return DimScalar(Rational(1) / (power_of_two(j) * factorial(j))); };
  DimScalar sign = sign_power(k + l);
  switch (family) {
    case Prop35Family::I:
      return {sign * inv_fact(k - l) * odd * m_product(top - 2, -2, l), 2 * (k - l)};
    case Prop35Family::II:
      // 1/(2^{k-l-1} (k-l-1)!) vanishes at k = l.
      if (k == l) return {DimScalar(0), std::nullopt};
      return {sign * inv_fact(k - l - 1) * odd * m_product(top - 2, -2, l), 2 * (k - l) - 1};
    case Prop35Family::III:
      return {sign * inv_fact(k - l) * odd * m_product(top, -2, l), 2 * (k - l) + 1};
    case Prop35Family::IV:
      return {-sign * inv_fact(k - l) * odd * m_product(top, -2, l + 1), 2 * (k - l)};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

GeneralizedFunction prop35_composed(Prop35Family family, unsigned k, unsigned l) {
  if (k < l)
    throw Error(ErrorCode::DomainError,
                "r^a dr^b table requires k >= l (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
  const GeneralizedFunction d = delta();
  switch (family) {
    case Prop35Family::I: return apply(Operator::R, apply(Operator::Dr, d, 2 * k), 2 * l);
    case Prop35Family::II:
      return apply(Operator::Omega, apply(Operator::R, apply(Operator::Dr, d, 2 * k), 2 * l + 1));
    case Prop35Family::III:
      return apply(Operator::Omega, apply(Operator::R, apply(Operator::Dr, d, 2 * k + 1), 2 * l));
    case Prop35Family::IV: return apply(Operator::R, apply(Operator::Dr, d, 2 * k + 1), 2 * l + 1);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace signumcalc
