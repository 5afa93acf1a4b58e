#ifndef ODELIN_POLYNOMIAL_HPP
#define ODELIN_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "odelin/rational.hpp"
#include "odelin/symbols.hpp"

namespace odelin {

// Power product of ring variables, kept sorted by variable code.
class Monomial {
public:
  struct VarPow {
    Variable var;
    int exp;
    friend bool operator==(const VarPow&, const VarPow&) = default;
  };

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial variable(Variable v, int exp = 1);

  bool is_one() const { return parts_.empty(); }
  int total_degree() const;
  int exponent(Variable v) const;
  const std::vector<VarPow>& parts() const { return parts_; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const; // requires divides(other) from other side
  Monomial erase(Variable v) const;                 // drop v entirely
  Monomial gcd(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.parts_ == b.parts_; }

  // Graded order: total degree first, then exponents compared variable by
  // variable from the greatest variable code downwards.  Compatible with
  // multiplication, so it can drive polynomial division.
  static int compare(const Monomial& a, const Monomial& b);

  std::string to_string() const;

private:
  std::vector<VarPow> parts_;
};

// Sparse multivariate polynomial over Q in jet variables, unknown-function
// derivatives and the independent variables; the universal currency of the
// engine.  Terms are kept sorted in descending monomial order.
class DiffPolynomial {
public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  DiffPolynomial() = default;
  explicit DiffPolynomial(const Rational& c);
  static DiffPolynomial zero() { return DiffPolynomial(); }
  static DiffPolynomial one() { return DiffPolynomial(Rational(1)); }
  static DiffPolynomial constant(const Rational& c) { return DiffPolynomial(c); }
  static DiffPolynomial var(Variable v, int exp = 1);
  static DiffPolynomial monomial(const Monomial& m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // True when only x and y (= jet 0) occur, i.e. the value lies in the
  // coefficient ring Q[x,y].
  bool is_base() const;
  Rational constant_value() const; // requires is_constant()

  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  DiffPolynomial operator-() const;
  DiffPolynomial& operator+=(const DiffPolynomial& o);
  DiffPolynomial& operator-=(const DiffPolynomial& o);
  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  DiffPolynomial& operator*=(const DiffPolynomial& o) { return *this = *this * o; }
  DiffPolynomial& operator*=(const Rational& c);
  friend DiffPolynomial operator*(DiffPolynomial a, const Rational& c) { return a *= c; }
  friend DiffPolynomial operator*(const Rational& c, DiffPolynomial a) { return a *= c; }
  DiffPolynomial& operator/=(const Rational& c);
  DiffPolynomial pow(unsigned e) const;

  friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b);
  friend bool operator!=(const DiffPolynomial& a, const DiffPolynomial& b) { return !(a == b); }
  // Deterministic total order (used for canonical sorting of outputs).
  static int compare(const DiffPolynomial& a, const DiffPolynomial& b);
  friend bool operator<(const DiffPolynomial& a, const DiffPolynomial& b) { return compare(a, b) < 0; }

  // Formal partial derivative with respect to a single ring variable.
  DiffPolynomial formal_derivative(Variable v) const;

  // Total derivative D_x = d_x + sum y^(k+1) d_{y^(k)}; unknown functions are
  // differentiated along y(x): D_x f = f_x + f_y y'.
  DiffPolynomial total_derivative() const;

  // Derivation of the (x,y)-function ring: x and y behave as coordinates,
  // unknown-function derivatives get their multi-index bumped.  Rejects jet
  // variables of positive order.
  DiffPolynomial partial_derivative(char xy) const;

  // Substitute v := num/den and clear denominators: returns
  // sum_e c_e num^e den^(d-e) where p = sum_e c_e v^e, d = deg_v p.
  DiffPolynomial substitute_cleared(Variable v, const DiffPolynomial& num, const DiffPolynomial& den) const;

  // Group terms by their sub-monomial in `vars`; the reassembled sum equals
  // the input exactly, and coefficients are free of `vars`.
  std::map<Monomial, DiffPolynomial, bool (*)(const Monomial&, const Monomial&)>
  collect(const std::set<Variable>& vars) const;

  int degree_in(Variable v) const;
  std::vector<DiffPolynomial> coefficients_in(Variable v) const; // index = power of v
  DiffPolynomial coefficient_of(Variable v, int power) const;

  void visit_variables(const std::function<void(Variable)>& fn) const;
  std::set<Variable> variables() const;
  bool contains(Variable v) const;
  int max_jet_order() const; // -1 when no jet variable occurs

  // Positive rational content (0 for the zero polynomial) and sign of the
  // leading coefficient.
  Rational content() const;
  DiffPolynomial primitive_part() const; // content and sign stripped
  Monomial monomial_content() const;
  int leading_sign() const;

  std::string to_string() const;

private:
  std::vector<Term> terms_; // descending monomial order, no zero coefficients
  friend class PolyBuilder;
};

inline bool monomial_less(const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) < 0; }
inline bool monomial_greater(const Monomial& a, const Monomial& b) { return Monomial::compare(a, b) > 0; }

// Accumulator for building polynomials term by term.
class PolyBuilder {
public:
  void add(const Monomial& m, const Rational& c);
  void add(const DiffPolynomial& p);
  void add_scaled(const DiffPolynomial& p, const Rational& c);
  DiffPolynomial take();

private:
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc_{monomial_greater};
};

// Exact division in the polynomial ring; nullopt when not divisible.
std::optional<DiffPolynomial> divide_exact(const DiffPolynomial& p, const DiffPolynomial& d);

// Multivariate gcd over Q (primitive, positive leading sign).
DiffPolynomial poly_gcd(DiffPolynomial a, DiffPolynomial b);

} // namespace odelin

#endif
