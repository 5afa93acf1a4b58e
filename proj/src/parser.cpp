#include "odelin/parser.hpp"

#include <cctype>
#include <map>

namespace odelin {

namespace {

struct SymbolEnv {
  std::map<std::string, FunctionId> byname;

  static SymbolEnv build(const std::vector<std::string>& params, const std::vector<std::string>& funcs) {
    SymbolEnv env;
    for (const auto& p : params) env.byname.emplace(p, FunctionId{FuncKind::param, names::intern(p)});
    for (const auto& f : funcs) env.byname.emplace(f, FunctionId{FuncKind::user_func, names::intern(f)});
    // report re-ingestion names
    env.byname.emplace("xi", FunctionId{FuncKind::xi, 0});
    env.byname.emplace("eta", FunctionId{FuncKind::eta, 0});
    env.byname.emplace("phi", FunctionId{FuncKind::phi, 0});
    env.byname.emplace("psi", FunctionId{FuncKind::psi, 0});
    for (int k = 0; k < 32; ++k) env.byname.emplace("a" + std::to_string(k), FunctionId{FuncKind::lf_coeff, k});
    return env;
  }
};

class ExprParser {
public:
  ExprParser(const std::string& text, const SymbolEnv& env) : text_(text), env_(env) {}

  DiffRational parse_full() {
    DiffRational e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected input");
    return e;
  }

  // lhs [= rhs]; returns lhs - rhs (implicit "= 0" permitted)
  DiffRational parse_equation() {
    DiffRational lhs = parse_expr();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      DiffRational rhs = parse_expr();
      lhs = lhs - rhs;
    }
    skip_ws();
    if (pos_ != text_.size()) error("unexpected input");
    return lhs;
  }

private:
  [[noreturn]] void error(const std::string& what) {
    fail(errc::syntax_error, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  DiffRational parse_expr() {
    int sign = 1;
    for (;;) {
      if (eat('+')) continue;
      if (eat('-')) {
        sign = -sign;
        continue;
      }
      break;
    }
    DiffRational acc = parse_term();
    if (sign < 0) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += parse_term();
      else if (eat('-'))
        acc -= parse_term();
      else
        break;
    }
    return acc;
  }

  DiffRational parse_term() {
    DiffRational acc = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        acc *= parse_factor();
      else if (eat('/')) {
        DiffRational d = parse_factor();
        if (d.is_zero()) error("division by zero");
        acc /= d;
      } else
        break;
    }
    return acc;
  }

  DiffRational parse_factor() {
    DiffRational base = parse_base();
    skip_ws();
    if (eat('^')) {
      int e = parse_integer();
      if (e < 0 && base.is_zero()) error("zero to a negative power");
      base = base.pow(e);
    }
    return base;
  }

  int parse_integer() {
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000L) error("integer too large");
      ++pos_;
    }
    return int(sign * v);
  }

  int count_primes() {
    int k = 0;
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++k;
      ++pos_;
      if (k > 4) error("more than four primes; use D(y,k)");
    }
    return k;
  }

  DiffRational parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v(0);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return DiffRational(Rational(v));
    }
    if (c == '(') {
      ++pos_;
      DiffRational e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_];
        ++pos_;
      }
      if (name == "x") return DiffRational(DiffPolynomial::var(Variable::x()));
      if (name == "y") {
        int k = count_primes();
        return DiffRational(DiffPolynomial::var(Variable::jet(k)));
      }
      if (name == "D") return parse_derivative();
      auto it = env_.byname.find(name);
      if (it == env_.byname.end())
        fail(errc::unknown_symbol, "unknown symbol '" + name + "' at position " + std::to_string(pos_));
      // optional application "(x,y)"
      size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'x') {
          ++pos_;
          expect(',');
          skip_ws();
          if (pos_ >= text_.size() || text_[pos_] != 'y') error("expected (x,y) application");
          ++pos_;
          expect(')');
        } else {
          pos_ = save; // not an application
        }
      } else {
        pos_ = save;
      }
      return DiffRational(DiffPolynomial::var(Variable::func(it->second, 0, 0)));
    }
    error("unexpected character");
  }

  // D(y,k) or D(name,i,j)
  DiffRational parse_derivative() {
    expect('(');
    skip_ws();
    std::string name;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name += text_[pos_];
      ++pos_;
    }
    if (name.empty()) error("expected name in D(...)");
    expect(',');
    int i = parse_integer();
    if (name == "y") {
      expect(')');
      if (i < 0) error("negative derivative order");
      return DiffRational(DiffPolynomial::var(Variable::jet(i)));
    }
    expect(',');
    int j = parse_integer();
    expect(')');
    if (i < 0 || j < 0) error("negative derivative order");
    auto it = env_.byname.find(name);
    if (it == env_.byname.end())
      fail(errc::unknown_symbol, "unknown symbol '" + name + "' in D(...)");
    return DiffRational(DiffPolynomial::var(Variable::func(it->second, i, j)));
  }

  const std::string& text_;
  const SymbolEnv& env_;
  size_t pos_ = 0;
};

} // namespace

DiffRational parse_expression(const std::string& text, const std::vector<std::string>& params,
                              const std::vector<std::string>& funcs) {
  SymbolEnv env = SymbolEnv::build(params, funcs);
  ExprParser p(text, env);
  return p.parse_full();
}

ODEProblem parse_ode(const std::string& text, const std::vector<std::string>& params,
                     const std::vector<std::string>& funcs) {
  SymbolEnv env = SymbolEnv::build(params, funcs);
  ExprParser parser(text, env);
  DiffRational eq = parser.parse_equation();

  // the zero set of eq = num/den is that of the numerator
  DiffPolynomial g = eq.num();
  int n = g.max_jet_order();
  if (n <= 0) fail(errc::missing_derivative, "highest derivative missing");
  if (n == 1) fail(errc::order_too_low, "order < 2: a first-order ODE is always linearizable");
  Variable top = Variable::jet(n);
  if (g.degree_in(top) > 1) fail(errc::not_quasi_linear, "not quasi-linear: y^(n) appears nonlinearly");
  DiffPolynomial coeff = g.coefficient_of(top, 1);
  if (coeff.contains(top)) fail(errc::internal, "leading coefficient inconsistent");
  DiffPolynomial rest = g.coefficient_of(top, 0);

  ODEProblem q;
  q.order = n;
  q.f = DiffRational(rest, coeff);
  for (const auto& p : params) q.params.push_back(FunctionId{FuncKind::param, names::intern(p)});
  for (const auto& f : funcs) q.funcs.push_back(FunctionId{FuncKind::user_func, names::intern(f)});
  return q;
}

std::string render(const DiffPolynomial& p) { return p.to_string(); }

std::string render(const DiffRational& f) { return f.to_string(); }

std::string render(const ODEProblem& q) {
  std::string lhs = Variable::jet(q.order).to_string();
  if (q.f.is_zero()) return lhs + " = 0";
  return lhs + " + (" + render(q.f) + ") = 0";
}

} // namespace odelin
