#include <doctest.h>

#include <cstdlib>
#include <random>

#include "odelin/parser.hpp"

using namespace odelin;

namespace {
DiffPolynomial X() { return DiffPolynomial::var(Variable::x()); }
DiffPolynomial Y(int k = 0) { return DiffPolynomial::var(Variable::jet(k)); }
} // namespace

TEST_CASE("third-order example") {
  ODEProblem q = parse_ode("y''' - 6*y'/x^2 + 3*y'^2/x - (1/2)*y'^3 = 0");
  CHECK(q.order == 3);
  DiffRational expect = DiffRational(-Y(1) * Rational(6), X() * X()) +
                        DiffRational(Y(1) * Y(1) * Rational(3), X()) -
                        DiffRational(Y(1).pow(3), DiffPolynomial::constant(Rational(2)));
  CHECK(q.f == expect);
}

TEST_CASE("trivial equation") {
  ODEProblem q = parse_ode("y'' = 0");
  CHECK(q.order == 2);
  CHECK(q.f.is_zero());
}

TEST_CASE("fourth-order equation with an undetermined function") {
  ODEProblem q = parse_ode(
      "2*x^2*y*D(y,4) + x^2*y^2 + h(x,y)*y'*y''' + 16*x*y*y''' + 6*x^2*y''^2 + "
      "48*x*y'*y'' + 24*y*y'' + 24*y'^2 = 0",
      {}, {"h"});
  CHECK(q.order == 4);
  REQUIRE(q.funcs.size() == 1);
  CHECK(q.params.empty());
  // denominator recorded as the coefficient of y'''' (times content normalization)
  CHECK(q.f.den() == X() * X() * Y() * Rational(2));
  DiffPolynomial h = DiffPolynomial::var(Variable::func(q.funcs[0], 0, 0));
  DiffPolynomial m = X() * X() * Y() * Y() + h * Y(1) * Y(3) + X() * Y() * Y(3) * Rational(16) +
                     X() * X() * Y(2) * Y(2) * Rational(6) + X() * Y(1) * Y(2) * Rational(48) +
                     Y() * Y(2) * Rational(24) + Y(1) * Y(1) * Rational(24);
  CHECK(q.f.num() == m);
}

TEST_CASE("primes and D notation agree") {
  CHECK(parse_ode("y'''' + y = 0") == parse_ode("D(y,4) + y = 0"));
}

TEST_CASE("typed rejections") {
  CHECK_THROWS_WITH_AS(parse_ode("y' = y"), doctest::Contains("order < 2"), Error);
  CHECK_THROWS_AS(parse_ode("x + y = 0"), Error);          // no derivative at all
  CHECK_THROWS_AS(parse_ode("y''^2 + y = 0"), Error);      // not quasi-linear
  CHECK_THROWS_AS(parse_ode("y'' + q*y = 0"), Error);      // undeclared symbol
  CHECK_THROWS_AS(parse_ode("y'' + (y = 0"), Error);       // syntax
  CHECK_THROWS_AS(parse_ode("y'' + 1/0 = 0"), Error);      // zero division

  try {
    parse_ode("y' = y");
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_too_low);
  }
  try {
    parse_ode("y''^2 + y = 0");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_quasi_linear);
  }
}

TEST_CASE("equation not solved for the top derivative by a unit") {
  // y'' appears linearly with coefficient y: valid quasi-linear input
  ODEProblem q = parse_ode("y*y'' + y'^2 = 0");
  CHECK(q.order == 2);
  CHECK(q.f == DiffRational(Y(1) * Y(1), Y()));
}

TEST_CASE("round-trip on a randomized corpus") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> coef(-9, 9), expo(1, 3), pick(0, 4), terms(1, 5);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + int(rng() % 3);
    std::string text = "D(y," + std::to_string(n) + ")";
    int nt = terms(rng);
    for (int t = 0; t < nt; ++t) {
      int c = coef(rng);
      if (c == 0) c = 1;
      std::string sep = c >= 0 ? " + " : " - ";
      std::string mono = std::to_string(std::abs(c));
      int nv = pick(rng) % 3 + 1;
      for (int v = 0; v < nv; ++v) {
        switch (pick(rng)) {
          case 0: mono += "*x"; break;
          case 1: mono += "*y"; break;
          case 2: mono += "*y'"; break;
          case 3: mono += "*p"; break;
          default: mono += "*x^" + std::to_string(expo(rng)); break;
        }
      }
      text += sep + mono;
    }
    text += " = 0";
    ODEProblem q = parse_ode(text, {"p"}, {});
    ODEProblem q2 = parse_ode(render(q), {"p"}, {});
    CHECK(q2 == q);
  }
}

TEST_CASE("expression renderer reparses") {
  DiffRational e = parse_expression("D(phi,1,2)*x - (3/4)*psi(x,y)^2 + y''", {}, {});
  DiffRational back = parse_expression(render(e), {}, {});
  CHECK(back == e);
}
