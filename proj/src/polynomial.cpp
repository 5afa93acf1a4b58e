#include "odelin/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace odelin {

// ---------------------------------------------------------------- names

namespace names {
namespace {
std::mutex mu;
std::vector<std::string> table;
std::unordered_map<std::string, int> index;
} // namespace

int intern(const std::string& name) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = index.find(name);
  if (it != index.end()) return it->second;
  table.push_back(name);
  int id = int(table.size()) - 1;
  index.emplace(name, id);
  return id;
}

const std::string& lookup(int id) {
  std::lock_guard<std::mutex> lock(mu);
  return table.at(size_t(id));
}
} // namespace names

std::string display_name(const FunctionId& f) {
  switch (f.kind) {
    case FuncKind::xi: return "xi";
    case FuncKind::eta: return "eta";
    case FuncKind::phi: return "phi";
    case FuncKind::psi: return "psi";
    case FuncKind::lf_coeff: return "a" + std::to_string(f.index);
    case FuncKind::param:
    case FuncKind::user_func: return names::lookup(f.index);
  }
  return "?";
}

std::string Variable::to_string() const {
  if (is_x()) return "x";
  if (is_jet()) {
    int k = jet_order();
    if (k == 0) return "y";
    if (k <= 4) return "y" + std::string(size_t(k), '\'');
    return "D(y," + std::to_string(k) + ")";
  }
  FunctionId f = function();
  if (dx() == 0 && dy() == 0) return display_name(f);
  return "D(" + display_name(f) + "," + std::to_string(dx()) + "," + std::to_string(dy()) + ")";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(Variable v, int exp) {
  Monomial m;
  if (exp != 0) m.parts_.push_back({v, exp});
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& p : parts_) d += p.exp;
  return d;
}

int Monomial::exponent(Variable v) const {
  for (const auto& p : parts_)
    if (p.var == v) return p.exp;
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  out.parts_.reserve(parts_.size() + other.parts_.size());
  size_t i = 0, j = 0;
  while (i < parts_.size() || j < other.parts_.size()) {
    if (j == other.parts_.size() || (i < parts_.size() && parts_[i].var < other.parts_[j].var)) {
      out.parts_.push_back(parts_[i++]);
    } else if (i == parts_.size() || other.parts_[j].var < parts_[i].var) {
      out.parts_.push_back(other.parts_[j++]);
    } else {
      int e = parts_[i].exp + other.parts_[j].exp;
      if (e != 0) out.parts_.push_back({parts_[i].var, e});
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  size_t j = 0;
  for (const auto& p : parts_) {
    while (j < other.parts_.size() && other.parts_[j].var < p.var) ++j;
    if (j == other.parts_.size() || !(other.parts_[j].var == p.var) || other.parts_[j].exp < p.exp)
      return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  size_t j = 0;
  for (const auto& p : parts_) {
    int e = p.exp;
    while (j < other.parts_.size() && other.parts_[j].var < p.var) ++j;
    if (j < other.parts_.size() && other.parts_[j].var == p.var) e -= other.parts_[j].exp;
    if (e != 0) out.parts_.push_back({p.var, e});
  }
  return out;
}

Monomial Monomial::erase(Variable v) const {
  Monomial out;
  for (const auto& p : parts_)
    if (!(p.var == v)) out.parts_.push_back(p);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  size_t j = 0;
  for (const auto& p : parts_) {
    while (j < other.parts_.size() && other.parts_[j].var < p.var) ++j;
    if (j < other.parts_.size() && other.parts_[j].var == p.var) {
      int e = std::min(p.exp, other.parts_[j].exp);
      if (e != 0) out.parts_.push_back({p.var, e});
    }
  }
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  // Walk from the greatest variable code downwards.
  auto ia = a.parts_.rbegin(), ea = a.parts_.rend();
  auto ib = b.parts_.rbegin(), eb = b.parts_.rend();
  while (ia != ea && ib != eb) {
    if (ib->var < ia->var) return 1;  // a has the greater variable
    if (ia->var < ib->var) return -1;
    if (ia->exp != ib->exp) return ia->exp < ib->exp ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != ea) return 1;
  if (ib != eb) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  if (parts_.empty()) return "1";
  std::string s;
  bool first = true;
  for (const auto& p : parts_) {
    if (!first) s += "*";
    first = false;
    s += p.var.to_string();
    if (p.exp != 1) s += "^" + std::to_string(p.exp);
  }
  return s;
}

// ---------------------------------------------------------------- builder

void PolyBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc_.erase(it);
  }
}

void PolyBuilder::add(const DiffPolynomial& p) {
  for (const auto& t : p.terms()) add(t.mono, t.coeff);
}

void PolyBuilder::add_scaled(const DiffPolynomial& p, const Rational& c) {
  if (c == 0) return;
  for (const auto& t : p.terms()) add(t.mono, t.coeff * c);
}

DiffPolynomial PolyBuilder::take() {
  DiffPolynomial out;
  out.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_) out.terms_.push_back({m, c});
  acc_.clear();
  return out;
}

// ---------------------------------------------------------------- polynomial

DiffPolynomial::DiffPolynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial::one(), c});
}

DiffPolynomial DiffPolynomial::var(Variable v, int exp) {
  DiffPolynomial p;
  p.terms_.push_back({Monomial::variable(v, exp), Rational(1)});
  return p;
}

DiffPolynomial DiffPolynomial::monomial(const Monomial& m, const Rational& c) {
  DiffPolynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool DiffPolynomial::is_base() const {
  for (const auto& t : terms_)
    for (const auto& p : t.mono.parts())
      if (!p.var.is_x() && !(p.var.is_jet() && p.var.jet_order() == 0)) return false;
  return true;
}

Rational DiffPolynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].coeff;
}

DiffPolynomial DiffPolynomial::operator-() const {
  DiffPolynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {
// Merge two descending term lists with a sign on the second.
std::vector<DiffPolynomial::Term> merge_terms(const std::vector<DiffPolynomial::Term>& a,
                                              const std::vector<DiffPolynomial::Term>& b, int sign) {
  std::vector<DiffPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = Monomial::compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}
} // namespace

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

DiffPolynomial& DiffPolynomial::operator-=(const DiffPolynomial& o) {
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return DiffPolynomial();
  if (b.terms_.size() == 1) {
    DiffPolynomial out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.terms_.push_back({t.mono.times(b.terms_[0].mono), t.coeff * b.terms_[0].coeff});
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const auto& u, const auto& v) { return Monomial::compare(u.mono, v.mono) > 0; });
    return out;
  }
  PolyBuilder acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc.add(ta.mono.times(tb.mono), ta.coeff * tb.coeff);
  return acc.take();
}

DiffPolynomial& DiffPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

DiffPolynomial& DiffPolynomial::operator/=(const Rational& c) {
  if (c == 0) fail(errc::internal, "division by zero rational");
  for (auto& t : terms_) t.coeff /= c;
  return *this;
}

DiffPolynomial DiffPolynomial::pow(unsigned e) const {
  DiffPolynomial acc = one();
  DiffPolynomial b = *this;
  while (e) {
    if (e & 1u) acc = acc * b;
    if (e >>= 1u) b = b * b;
  }
  return acc;
}

bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

int DiffPolynomial::compare(const DiffPolynomial& a, const DiffPolynomial& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = Monomial::compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    int s = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (s != 0) return s;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

DiffPolynomial DiffPolynomial::formal_derivative(Variable v) const {
  PolyBuilder acc;
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial m = t.mono.divided_by(Monomial::variable(v));
    acc.add(m, t.coeff * e);
  }
  return acc.take();
}

DiffPolynomial DiffPolynomial::total_derivative() const {
  PolyBuilder acc;
  for (const auto& t : terms_) {
    for (const auto& p : t.mono.parts()) {
      // d/dx of var^e -> e var^(e-1) dvar, dvar per chain rule
      Monomial rest = t.mono.divided_by(Monomial::variable(p.var));
      Rational c = t.coeff * p.exp;
      if (p.var.is_x()) {
        acc.add(rest, c);
      } else if (p.var.is_jet()) {
        acc.add(rest.times(Monomial::variable(Variable::jet(p.var.jet_order() + 1))), c);
      } else {
        FunctionId f = p.var.function();
        acc.add(rest.times(Monomial::variable(Variable::func(f, p.var.dx() + 1, p.var.dy()))), c);
        Monomial chain = rest.times(Monomial::variable(Variable::func(f, p.var.dx(), p.var.dy() + 1)));
        acc.add(chain.times(Monomial::variable(Variable::jet(1))), c);
      }
    }
  }
  return acc.take();
}

DiffPolynomial DiffPolynomial::partial_derivative(char xy) const {
  if (xy != 'x' && xy != 'y') fail(errc::internal, "partial_derivative expects 'x' or 'y'");
  PolyBuilder acc;
  for (const auto& t : terms_) {
    for (const auto& p : t.mono.parts()) {
      if (p.var.is_jet() && p.var.jet_order() >= 1)
        fail(errc::misuse, "partial_derivative applied to a jet variable of positive order");
      Monomial rest = t.mono.divided_by(Monomial::variable(p.var));
      Rational c = t.coeff * p.exp;
      if (p.var.is_x()) {
        if (xy == 'x') acc.add(rest, c);
      } else if (p.var.is_jet()) { // y itself
        if (xy == 'y') acc.add(rest, c);
      } else {
        FunctionId f = p.var.function();
        Variable bumped = xy == 'x' ? Variable::func(f, p.var.dx() + 1, p.var.dy())
                                    : Variable::func(f, p.var.dx(), p.var.dy() + 1);
        acc.add(rest.times(Monomial::variable(bumped)), c);
      }
    }
  }
  return acc.take();
}

DiffPolynomial DiffPolynomial::substitute_cleared(Variable v, const DiffPolynomial& num,
                                                  const DiffPolynomial& den) const {
  int d = degree_in(v);
  if (d == 0) return *this;
  std::vector<DiffPolynomial> by_deg = coefficients_in(v);
  // precompute powers
  std::vector<DiffPolynomial> num_pow(size_t(d) + 1), den_pow(size_t(d) + 1);
  num_pow[0] = one();
  den_pow[0] = one();
  for (int e = 1; e <= d; ++e) {
    num_pow[size_t(e)] = num_pow[size_t(e - 1)] * num;
    den_pow[size_t(e)] = den_pow[size_t(e - 1)] * den;
  }
  DiffPolynomial out;
  for (int e = 0; e <= d; ++e) {
    if (by_deg[size_t(e)].is_zero()) continue;
    out += by_deg[size_t(e)] * num_pow[size_t(e)] * den_pow[size_t(d - e)];
  }
  return out;
}

std::map<Monomial, DiffPolynomial, bool (*)(const Monomial&, const Monomial&)>
DiffPolynomial::collect(const std::set<Variable>& vars) const {
  std::map<Monomial, DiffPolynomial, bool (*)(const Monomial&, const Monomial&)> out(monomial_less);
  for (const auto& t : terms_) {
    Monomial key, rest;
    for (const auto& p : t.mono.parts()) {
      if (vars.count(p.var))
        key = key.times(Monomial::variable(p.var, p.exp));
      else
        rest = rest.times(Monomial::variable(p.var, p.exp));
    }
    out[key] += DiffPolynomial::monomial(rest, t.coeff);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

int DiffPolynomial::degree_in(Variable v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

std::vector<DiffPolynomial> DiffPolynomial::coefficients_in(Variable v) const {
  std::vector<DiffPolynomial> out(size_t(degree_in(v)) + 1);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    out[size_t(e)] += DiffPolynomial::monomial(t.mono.erase(v), t.coeff);
  }
  return out;
}

DiffPolynomial DiffPolynomial::coefficient_of(Variable v, int power) const {
  PolyBuilder acc;
  for (const auto& t : terms_)
    if (t.mono.exponent(v) == power) acc.add(t.mono.erase(v), t.coeff);
  return acc.take();
}

void DiffPolynomial::visit_variables(const std::function<void(Variable)>& fn) const {
  for (const auto& t : terms_)
    for (const auto& p : t.mono.parts()) fn(p.var);
}

std::set<Variable> DiffPolynomial::variables() const {
  std::set<Variable> out;
  visit_variables([&](Variable v) { out.insert(v); });
  return out;
}

bool DiffPolynomial::contains(Variable v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v) != 0) return true;
  return false;
}

int DiffPolynomial::max_jet_order() const {
  int k = -1;
  visit_variables([&](Variable v) {
    if (v.is_jet()) k = std::max(k, v.jet_order());
  });
  return k;
}

Rational DiffPolynomial::content() const {
  Rational g(0);
  for (const auto& t : terms_) {
    g = rational_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

int DiffPolynomial::leading_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_[0].coeff);
}

DiffPolynomial DiffPolynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_sign() < 0) c = -c;
  DiffPolynomial out = *this;
  out /= c;
  return out;
}

Monomial DiffPolynomial::monomial_content() const {
  if (terms_.empty()) return Monomial::one();
  Monomial g = terms_[0].mono;
  for (size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = g.gcd(terms_[i].mono);
  return g;
}

std::string DiffPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) {
      if (c.get_den() == 1)
        os << c.get_num().get_str();
      else
        os << "(" << c.get_str() << ")";
    }
    if (!t.mono.is_one()) {
      if (!unit) os << "*";
      os << t.mono.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- division / gcd

std::optional<DiffPolynomial> divide_exact(const DiffPolynomial& p, const DiffPolynomial& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return DiffPolynomial();
  DiffPolynomial rem = p;
  PolyBuilder quot;
  const auto& dl = d.leading_term();
  while (!rem.is_zero()) {
    const auto& rl = rem.leading_term();
    if (!dl.mono.divides(rl.mono)) return std::nullopt;
    Monomial qm = rl.mono.divided_by(dl.mono);
    Rational qc = rl.coeff / dl.coeff;
    quot.add(qm, qc);
    rem -= d * DiffPolynomial::monomial(qm, qc);
  }
  return quot.take();
}

namespace {

// Pseudo-remainder of a by b with respect to v (no bookkeeping).
DiffPolynomial prem_raw(DiffPolynomial a, const DiffPolynomial& b, Variable v) {
  int db = b.degree_in(v);
  DiffPolynomial lb = b.coefficient_of(v, db);
  int da = a.degree_in(v);
  while (!a.is_zero() && da >= db) {
    DiffPolynomial la = a.coefficient_of(v, da);
    a = a * lb - la * DiffPolynomial::var(v, da - db) * b;
    int dn = a.degree_in(v);
    da = dn;
  }
  return a;
}

DiffPolynomial gcd_univariate(DiffPolynomial a, DiffPolynomial b, Variable v);

// Content of p seen as a univariate polynomial in v (gcd of coefficients).
DiffPolynomial content_in(const DiffPolynomial& p, Variable v) {
  std::vector<DiffPolynomial> cs = p.coefficients_in(v);
  DiffPolynomial g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive_part() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? DiffPolynomial::one() : g;
}

DiffPolynomial gcd_univariate(DiffPolynomial a, DiffPolynomial b, Variable v) {
  // primitive PRS; inputs primitive in v
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(v) == 0) return DiffPolynomial::one();
    DiffPolynomial r = prem_raw(a, b, v);
    a = b;
    if (r.is_zero()) {
      b = DiffPolynomial();
    } else {
      DiffPolynomial rc = content_in(r, v);
      b = *divide_exact(r.primitive_part(), rc);
    }
  }
  return a.primitive_part();
}

} // namespace

DiffPolynomial poly_gcd(DiffPolynomial a, DiffPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return DiffPolynomial::one();
  // main variable: greatest variable occurring in either
  Variable v;
  auto consider = [&](Variable w) {
    if (!v.valid() || v < w) v = w;
  };
  a.visit_variables(consider);
  b.visit_variables(consider);
  DiffPolynomial ca = content_in(a, v), cb = content_in(b, v);
  DiffPolynomial pa = *divide_exact(a.primitive_part(), ca);
  DiffPolynomial pb = *divide_exact(b.primitive_part(), cb);
  DiffPolynomial g = gcd_univariate(pa, pb, v);
  DiffPolynomial cg = poly_gcd(ca, cb);
  return (g * cg).primitive_part();
}

} // namespace odelin
