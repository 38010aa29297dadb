#include "parser.hpp"

#include <cctype>

namespace signumcalc {

namespace {

constexpr unsigned kMaxDepth = 256;
constexpr unsigned kMaxExponent = 64;
constexpr std::size_t kMaxScalarDegree = 512;

std::shared_ptr<Expr> node(Expr::Node kind, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->node = kind;
  e->offset = offset;
  return e;
}

bool has_hole(const Expr& e) {
  if (e.node == Expr::Node::Hole) return true;
  for (const auto& c : e.children)
    if (has_hole(*c)) return true;
  return false;
}

ExprPtr substitute(const ExprPtr& tmpl, const ExprPtr& value) {
  if (tmpl->node == Expr::Node::Hole) return value;
  if (tmpl->children.empty()) return tmpl;
  auto copy = std::make_shared<Expr>(*tmpl);
  for (auto& c : copy->children) c = substitute(c, value);
  return copy;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr(false);
    skip();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') fail({"+", "-", "end of input"}, "unbalanced ')'");
      fail({"+", "-", "end of input"}, "unexpected character");
    }
    if (has_hole(*e)) throw ArityError(text_.size(), "expression has no delta");
    return e;
  }

 private:
  struct Item {
    enum class Kind { Scalar, Op, Template } kind;
    std::size_t offset;
    DimScalar scale;
    Operator op = Operator::R;
    unsigned power = 1;
    ExprPtr tmpl;
  };

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) { fail_at(pos_, std::move(expected), what); }

  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected, const std::string& what) {
    std::string msg = what + " at offset " + std::to_string(at);
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    }
    throw ParseError(at, std::move(expected), msg);
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail({}, "nesting deeper than " + std::to_string(kMaxDepth));
    }
    ~DepthGuard() { --p.depth_; }
  };

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view peek_ident() {
    skip();
    std::size_t end = pos_;
    if (end < text_.size() && ident_start(text_[end]))
      while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail({"integer"}, "expected an integer");
    if (pos_ - start > 64) fail_at(start, {"integer"}, "integer literal too long");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned exponent() {
    skip();
    std::size_t at = pos_;
    mpz_class v = integer();
    if (v > kMaxExponent) fail_at(at, {"exponent <= " + std::to_string(kMaxExponent)}, "exponent too large");
    return static_cast<unsigned>(v.get_ui());
  }

  void check_size(const DimScalar& s, std::size_t at) {
    if (s.numerator().size() > kMaxScalarDegree || s.denominator().size() > kMaxScalarDegree)
      fail_at(at, {}, "scalar literal too large");
  }

  // ------------------------------------------------------------ scalars

  DimScalar scalar_expr() {
    DepthGuard guard(*this);
    std::size_t at = pos_;
    DimScalar acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    acc = scalar_term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      DimScalar t = scalar_term();
      acc = c == '+' ? acc + t : acc - t;
      check_size(acc, at);
    }
    return acc;
  }

  // sfactor (('*' | '/') sfactor)*; a '*' not followed by a scalar is left
  // for the enclosing term.
  DimScalar scalar_term() {
    DimScalar acc = scalar_factor();
    while (true) {
      char c = peek();
      if (c != '*' && c != '/') break;
      std::size_t save = pos_;
      ++pos_;
      if (c == '*' && !starts_scalar()) {
        pos_ = save;
        break;
      }
      std::size_t at = pos_;
      DimScalar f = scalar_factor();
      if (c == '/') {
        if (f.is_zero()) fail_at(at, {"non-zero divisor"}, "division by zero");
        acc = acc / f;
      } else {
        acc = acc * f;
      }
      check_size(acc, at);
    }
    return acc;
  }

  bool starts_scalar() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return true;
    if (c == '(') {
      std::size_t save = pos_;
      bool ok = try_paren_scalar().has_value();
      pos_ = save;
      return ok;
    }
    return peek_ident() == "m";
  }

  std::optional<DimScalar> try_paren_scalar() {
    std::size_t save = pos_;
    try {
      if (!accept('(')) return std::nullopt;
      DimScalar s = scalar_expr();
      if (!accept(')')) {
        pos_ = save;
        return std::nullopt;
      }
      return s;
    } catch (const ParseError& e) {
      if (depth_exceeded(e)) throw;
      pos_ = save;
      return std::nullopt;
    }
  }

  static bool depth_exceeded(const ParseError& e) {
    return std::string_view(e.what()).find("nesting deeper") != std::string_view::npos;
  }

  DimScalar scalar_factor() {
    DepthGuard guard(*this);
    std::size_t at = pos_;
    if (accept('-')) return -scalar_factor();
    DimScalar base;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = DimScalar(Rational(integer(), 1));
    } else if (c == '(') {
      ++pos_;
      base = scalar_expr();
      if (!accept(')')) fail({")"}, "expected ')'");
    } else if (peek_ident() == "m") {
      ++pos_;
      base = DimScalar::m();
    } else {
      fail({"integer", "m", "("}, "expected a scalar");
    }
    if (accept('^')) {
      unsigned e = exponent();
      DimScalar p(1);
      for (unsigned i = 0; i < e; ++i) {
        p = p * base;
        check_size(p, at);
      }
      base = p;
    }
    return base;
  }

  // ------------------------------------------------------------ expressions

  // A group or the whole input: sum of terms. Inside a group, terms without
  // an operand become templates ending in a hole.
  ExprPtr expr(bool in_group) {
    DepthGuard guard(*this);
    std::size_t start = pos_;
    std::vector<ExprPtr> terms;
    skip();
    bool neg = false;
    if (peek() == '-' ) {
      ++pos_;
      neg = true;
    } else {
      accept('+');
    }
    ExprPtr t = term(in_group);
    terms.push_back(neg ? negate(t) : t);
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      t = term(in_group);
      terms.push_back(c == '-' ? negate(t) : t);
    }
    if (terms.size() == 1) return terms.front();
    bool holes = has_hole(*terms.front());
    for (const auto& x : terms)
      if (has_hole(*x) != holes)
        throw ArityError(x->offset, "group mixes operator templates and terms with delta");
    auto sum = node(Expr::Node::Sum, start);
    sum->length = pos_ - start;
    sum->children = std::move(terms);
    return sum;
  }

  ExprPtr negate(const ExprPtr& e) {
    auto n = node(Expr::Node::Neg, e->offset);
    n->length = e->length;
    n->children.push_back(e);
    return n;
  }

  ExprPtr term(bool in_group) {
    skip();
    const std::size_t start = pos_;
    std::vector<Item> items;
    ExprPtr operand;
    bool pending_star = false;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || (!pending_star && (c == '+' || c == '-'))) break;
      if (operand) throw ArityError(pos_, "nothing may follow delta in a term");
      if (c == '*' && !items.empty() && !pending_star) {
        ++pos_;
        pending_star = true;
        continue;
      }
      pending_star = false;
      std::size_t at = pos_;
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        items.push_back({Item::Kind::Scalar, at, scalar_term(), Operator::R, 1, nullptr});
        continue;
      }
      if (c == '(') {
        if (auto s = try_paren_scalar()) {
          // the scalar may continue with '^', '*' or '/'
          pos_ = at;
          items.push_back({Item::Kind::Scalar, at, scalar_term(), Operator::R, 1, nullptr});
          continue;
        }
        ++pos_;
        ExprPtr inner = expr(true);
        if (!accept(')')) fail({")", "+", "-"}, "expected ')'");
        if (has_hole(*inner)) {
          items.push_back({Item::Kind::Template, at, DimScalar(1), Operator::R, 1, inner});
        } else {
          operand = inner;
        }
        continue;
      }
      std::string_view id = peek_ident();
      if (id.empty())
        fail({"delta", "s[n]", "operator", "scalar", "("}, "unexpected character");
      if (id == "m") {
        items.push_back({Item::Kind::Scalar, at, scalar_term(), Operator::R, 1, nullptr});
        continue;
      }
      pos_ += id.size();
      if (id == "delta") {
        operand = node(Expr::Node::Delta, at);
        std::const_pointer_cast<Expr>(operand)->length = id.size();
        continue;
      }
      if (id == "s" && peek() == '[') {
        ++pos_;
        std::size_t idx_at = pos_;
        mpz_class n = integer();
        if (n > 4096) fail_at(idx_at, {"index <= 4096"}, "signum index too large");
        if (!accept(']')) fail({"]"}, "expected ']'");
        auto s = node(Expr::Node::Signum, at);
        s->index = static_cast<unsigned>(n.get_ui());
        s->length = pos_ - at;
        operand = s;
        continue;
      }
      auto op = operator_from_name(id);
      if (!op)
        fail_at(at, {"delta", "s[n]", "r", "dr", "w", "x", "D", "L", "E", "G", "LB", "inv_r", "inv_x", "inv_r_dr"},
                "unknown name '" + std::string(id) + "'");
      unsigned power = 1;
      if (peek() == '^') {
        if (!allows_power(*op))
          fail({}, "operator '" + std::string(id) + "' does not take a power");
        ++pos_;
        power = exponent();
      }
      items.push_back({Item::Kind::Op, at, DimScalar(1), *op, power, nullptr});
    }
    if (pending_star) fail({"operator", "scalar", "delta", "("}, "expected a factor after '*'");
    if (items.empty() && !operand) fail({"delta", "s[n]", "operator", "scalar", "("}, "expected a term");
    ExprPtr value = operand;
    if (!value) {
      if (!in_group) throw ArityError(start, "term has no delta");
      value = node(Expr::Node::Hole, pos_);
    }
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      switch (it->kind) {
        case Item::Kind::Scalar: {
          auto s = node(Expr::Node::Scale, it->offset);
          s->scale = it->scale;
          s->children.push_back(value);
          value = s;
          break;
        }
        case Item::Kind::Op: {
          auto a = node(Expr::Node::Apply, it->offset);
          a->op = it->op;
          a->power = it->power;
          a->children.push_back(value);
          value = a;
          break;
        }
        case Item::Kind::Template: value = substitute(it->tmpl, value); break;
      }
      std::const_pointer_cast<Expr>(value)->length = pos_ - it->offset;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

std::string coefficient_prefix(const DimScalar& c, bool alias) {
  if (c == DimScalar(1)) return "";
  if (c == DimScalar(-1)) return "-";
  std::string s = c.to_string();
  if (!alias) return s + " * ";
  bool neg = !s.empty() && s[0] == '-';
  std::string a = neg ? (-c).to_string() : s;
  bool atomic = a == "m";
  if (!atomic) {
    atomic = true;
    for (char ch : a) atomic = atomic && std::isdigit(static_cast<unsigned char>(ch));
  }
  if (!atomic && a.front() == '(' && a.back() == ')') {
    int depth = 0;
    atomic = true;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      depth += a[i] == '(' ? 1 : a[i] == ')' ? -1 : 0;
      if (depth == 0) atomic = false;
    }
  }
  return std::string(neg ? "-" : "") + (atomic ? a : "(" + a + ")") + " * ";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i][0] == '-') out += " - " + terms[i].substr(1);
    else out += " + " + terms[i];
  }
  return out;
}

std::string dirac_name(unsigned n) {
  if (n == 0) return "delta";
  if (n == 1) return "D delta";
  return "D^" + std::to_string(n) + " delta";
}

std::string power_suffix(const char* name, unsigned n) {
  return n == 1 ? name : std::string(name) + "^" + std::to_string(n);
}

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse(); }

std::string describe(const Expr& e) {
  switch (e.node) {
    case Expr::Node::Delta: return "Delta";
    case Expr::Node::Hole: return "Hole";
    case Expr::Node::Signum: return "Signum(" + std::to_string(e.index) + ")";
    case Expr::Node::Apply: {
      std::string op = to_string(e.op);
      if (e.power != 1) op = "Pow(" + op + "," + std::to_string(e.power) + ")";
      return "OpApply(" + op + ", " + describe(*e.children.front()) + ")";
    }
    case Expr::Node::Scale: return "Scale(" + e.scale.to_string() + ", " + describe(*e.children.front()) + ")";
    case Expr::Node::Neg: return "Neg(" + describe(*e.children.front()) + ")";
    case Expr::Node::Sum: {
      std::string s = "Sum(";
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? ", " : "") + describe(*e.children[i]);
      return s + ")";
    }
  }
  return "?";
}

GeneralizedFunction evaluate(const Expr& e, std::string_view source) {
  switch (e.node) {
    case Expr::Node::Delta: return delta();
    case Expr::Node::Signum: return signum_basis(e.index);
    case Expr::Node::Hole: throw ArityError(e.offset, "expression has no delta");
    case Expr::Node::Scale: return evaluate(*e.children.front(), source) * e.scale;
    case Expr::Node::Neg: return evaluate(*e.children.front(), source) * DimScalar(-1);
    case Expr::Node::Sum: {
      GeneralizedFunction acc = evaluate(*e.children.front(), source);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        GeneralizedFunction next = evaluate(*e.children[i], source);
        if (acc.space() != next.space())
          throw Error(ErrorCode::SpaceMismatch, "cannot add a " + std::string(to_string(acc.space())) + " and a " +
                                                    to_string(next.space()) + " (term at offset " +
                                                    std::to_string(e.children[i]->offset) + ")");
        acc += next;
      }
      return acc;
    }
    case Expr::Node::Apply: {
      GeneralizedFunction arg = evaluate(*e.children.front(), source);
      try {
        return apply(e.op, arg, e.power);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        if (source.empty() || e.offset >= source.size()) throw;
        std::string_view span = source.substr(e.offset, e.length);
        while (!span.empty() && std::isspace(static_cast<unsigned char>(span.back()))) span.remove_suffix(1);
        throw Error(err.code(), std::string(err.what()) + " in `" + std::string(span) + "` at offset " +
                                    std::to_string(e.offset));
      }
    }
  }
  throw Error(ErrorCode::InvalidArgument, "malformed expression");
}

GeneralizedFunction evaluate(std::string_view input) { return evaluate(*parse(input), input); }

std::string print_canonical(const GeneralizedFunction& g, std::optional<long> m0) {
  if (g.is_dist()) return print_basis(m0 ? specialize(g, *m0) : g);
  std::vector<std::string> terms;
  for (auto t : to_radial(g)) {
    if (m0) t.coefficient = DimScalar(t.coefficient.eval(*m0));
    if (t.coefficient.is_zero()) continue;
    std::string basis = t.label == RadialLabel::SD ? power_suffix("dr", t.order) + " delta"
                        : t.order == 0             ? std::string("w delta")
                                                   : "w " + power_suffix("dr", t.order) + " delta";
    terms.push_back(coefficient_prefix(t.coefficient, true) + basis);
  }
  return join_terms(terms);
}

std::string print_basis(const GeneralizedFunction& g) {
  std::vector<std::string> terms;
  for (const auto& [n, c] : g.terms()) {
    std::string basis = g.is_dist() ? dirac_name(n) : "s[" + std::to_string(n) + "]";
    terms.push_back(coefficient_prefix(c, false) + basis);
  }
  return join_terms(terms);
}

}  // namespace signumcalc
