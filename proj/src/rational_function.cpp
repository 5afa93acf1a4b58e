#include "odelin/rational_function.hpp"

namespace odelin {

DiffRational::DiffRational(DiffPolynomial num, DiffPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::internal, "zero denominator");
  normalize();
}

void DiffRational::normalize() {
  if (num_.is_zero()) {
    den_ = DiffPolynomial::one();
    return;
  }
  Rational g = rational_gcd(num_.content(), den_.content());
  if (den_.leading_sign() < 0) g = -g;
  num_ /= g;
  den_ /= g;
}

DiffRational DiffRational::operator-() const {
  DiffRational out = *this;
  out.num_ = -out.num_;
  return out;
}

DiffRational operator+(const DiffRational& a, const DiffRational& b) {
  if (a.den_ == b.den_) return DiffRational(a.num_ + b.num_, a.den_);
  return DiffRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

DiffRational operator-(const DiffRational& a, const DiffRational& b) {
  if (a.den_ == b.den_) return DiffRational(a.num_ - b.num_, a.den_);
  return DiffRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

DiffRational operator*(const DiffRational& a, const DiffRational& b) {
  return DiffRational(a.num_ * b.num_, a.den_ * b.den_);
}

DiffRational operator/(const DiffRational& a, const DiffRational& b) {
  if (b.is_zero()) fail(errc::internal, "division by zero rational function");
  return DiffRational(a.num_ * b.den_, a.den_ * b.num_);
}

DiffRational DiffRational::pow(int e) const {
  if (e == 0) return one();
  if (e < 0) {
    if (is_zero()) fail(errc::internal, "zero to a negative power");
    return DiffRational(den_.pow(unsigned(-e)), num_.pow(unsigned(-e)));
  }
  return DiffRational(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

bool operator==(const DiffRational& a, const DiffRational& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

DiffRational DiffRational::reduced() const {
  if (num_.is_zero() || den_.is_constant()) return *this;
  DiffPolynomial g = poly_gcd(num_, den_);
  if (g.is_constant()) return *this;
  return DiffRational(*divide_exact(num_, g), *divide_exact(den_, g));
}

DiffRational DiffRational::partial_derivative(char xy) const {
  if (is_polynomial()) {
    Rational d = den_.constant_value();
    DiffPolynomial n = num_.partial_derivative(xy);
    n /= d;
    return DiffRational(n);
  }
  return DiffRational(num_.partial_derivative(xy) * den_ - num_ * den_.partial_derivative(xy), den_ * den_);
}

DiffRational DiffRational::total_derivative() const {
  if (is_polynomial()) {
    Rational d = den_.constant_value();
    DiffPolynomial n = num_.total_derivative();
    n /= d;
    return DiffRational(n);
  }
  return DiffRational(num_.total_derivative() * den_ - num_ * den_.total_derivative(), den_ * den_);
}

Rational evaluate_base_poly(const DiffPolynomial& p, const Rational& x0, const Rational& y0) {
  Rational out(0);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (const auto& vp : t.mono.parts()) {
      Rational base;
      if (vp.var.is_x())
        base = x0;
      else if (vp.var.is_jet() && vp.var.jet_order() == 0)
        base = y0;
      else
        fail(errc::internal, "evaluate_base_poly: non-base variable " + vp.var.to_string());
      v *= rational_pow(base, unsigned(vp.exp));
    }
    out += v;
  }
  return out;
}

Rational DiffRational::evaluate_base(const Rational& x0, const Rational& y0) const {
  Rational d = evaluate_base_poly(den_, x0, y0);
  if (d == 0) fail(errc::singular_point, "denominator vanishes at the expansion point");
  return evaluate_base_poly(num_, x0, y0) / d;
}

std::string DiffRational::to_string() const {
  if (is_polynomial() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace odelin
