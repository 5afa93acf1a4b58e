#ifndef ODELIN_RATIONAL_FUNCTION_HPP
#define ODELIN_RATIONAL_FUNCTION_HPP

#include "odelin/polynomial.hpp"

namespace odelin {

// Quotient of differential polynomials.  Normalization removes the common
// rational content of numerator and denominator and fixes the sign so that
// the denominator's leading coefficient is positive; polynomial factors are
// cancelled only when requested (reduce()).
class DiffRational {
public:
  DiffRational() : num_(), den_(DiffPolynomial::one()) {}
  DiffRational(DiffPolynomial num, DiffPolynomial den);
  /* implicit */ DiffRational(const DiffPolynomial& p) : num_(p), den_(DiffPolynomial::one()) {}
  explicit DiffRational(const Rational& c) : num_(DiffPolynomial::constant(c)), den_(DiffPolynomial::one()) {}

  static DiffRational zero() { return DiffRational(); }
  static DiffRational one() { return DiffRational(Rational(1)); }

  const DiffPolynomial& num() const { return num_; }
  const DiffPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  DiffRational operator-() const;
  friend DiffRational operator+(const DiffRational& a, const DiffRational& b);
  friend DiffRational operator-(const DiffRational& a, const DiffRational& b);
  friend DiffRational operator*(const DiffRational& a, const DiffRational& b);
  friend DiffRational operator/(const DiffRational& a, const DiffRational& b);
  DiffRational& operator+=(const DiffRational& o) { return *this = *this + o; }
  DiffRational& operator-=(const DiffRational& o) { return *this = *this - o; }
  DiffRational& operator*=(const DiffRational& o) { return *this = *this * o; }
  DiffRational& operator/=(const DiffRational& o) { return *this = *this / o; }
  DiffRational pow(int e) const; // negative exponents flip num/den

  // Equality of the represented rational functions (cross multiplication).
  friend bool operator==(const DiffRational& a, const DiffRational& b);
  friend bool operator!=(const DiffRational& a, const DiffRational& b) { return !(a == b); }

  // Cancel the polynomial gcd of numerator and denominator.
  DiffRational reduced() const;

  // Derivation of the (x,y)-function ring through the quotient rule.
  DiffRational partial_derivative(char xy) const;
  DiffRational total_derivative() const;

  // Value at x = x0, y = y0 for base entries; singular_point error when the
  // denominator vanishes.
  Rational evaluate_base(const Rational& x0, const Rational& y0) const;

  std::string to_string() const;

private:
  void normalize();
  DiffPolynomial num_, den_;
};

// Evaluate a base polynomial (in x, y only) at a rational point.
Rational evaluate_base_poly(const DiffPolynomial& p, const Rational& x0, const Rational& y0);

} // namespace odelin

#endif
