#ifndef ODELIN_RATIONAL_HPP
#define ODELIN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace odelin {

// Exact arbitrary-precision rational; the coefficient domain of everything.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Nonnegative gcd of two rationals: gcd(a/b, c/d) = gcd(a,c) / lcm(b,d).
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return g;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational acc(1);
  Rational b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

} // namespace odelin

#endif
