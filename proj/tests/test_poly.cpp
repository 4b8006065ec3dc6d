#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quotcert/error.hpp"
#include "quotcert/polynomial.hpp"

using namespace quotcert;

namespace {

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<unsigned> expo(0, 3);
  Polynomial p(ring);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(ring->arity(), 0);
    for (auto& e : m) e = expo(rng);
    int c = coeff(rng);
    if (c == 0) continue;
    p += Polynomial::term(ring, m, Rational(c, den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parse: determinant generator of the 2x2 scenario") {
  auto ring = PolynomialRing::make({"a", "b", "c", "d"});
  Polynomial det = parse_polynomial(ring, "a*d - b*c");
  Polynomial expected = Polynomial::variable(ring, 0) * Polynomial::variable(ring, 3) -
                        Polynomial::variable(ring, 1) * Polynomial::variable(ring, 2);
  CHECK(det == expected);
}

TEST_CASE("parse: zero literal") {
  auto ring = PolynomialRing::make({"x"});
  CHECK(parse_polynomial(ring, "0").is_zero());
}

TEST_CASE("parse: cancellation leaves y^2") {
  // Hand expansion: (x+y)^2 - x^2 - 2xy = y^2.
  auto ring = PolynomialRing::make({"x", "y"});
  Polynomial p = parse_polynomial(ring, "(x + y)^2 - x^2 - 2*x*y");
  Polynomial y = Polynomial::variable(ring, 1);
  CHECK(p == y * y);
}

TEST_CASE("parse: rationals, nested parens, leading minus") {
  auto ring = PolynomialRing::make({"x"});
  CHECK(parse_polynomial(ring, "1/2*x + 1/2*x") == Polynomial::variable(ring, 0));
  CHECK(parse_polynomial(ring, "-x + x").is_zero());
  CHECK(parse_polynomial(ring, "((x))") == Polynomial::variable(ring, 0));
  CHECK(parse_polynomial(ring, "2^3").constant_value() == 8);
}

TEST_CASE("parse errors carry positions and names") {
  auto ring = PolynomialRing::make({"x"});
  CHECK_THROWS_AS(parse_polynomial(ring, "x + "), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "x * y"), UnknownVariableError);
  CHECK_THROWS_AS(parse_polynomial(ring, "x ^ -1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "1/0"), ParseError);
  try {
    parse_polynomial(ring, "x * yz");
  } catch (const UnknownVariableError& e) {
    CHECK(e.name == "yz");
    CHECK(e.offset == 4);
  }
}

TEST_CASE("arithmetic: difference of squares, pow identity, exact cancellation") {
  auto ring = PolynomialRing::make({"x", "y"});
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + Polynomial::one(ring)).pow(0).is_one());
  CHECK(((x + y).pow(2) - (x * x + x * y.scaled(2) + y * y)).is_zero());
}

TEST_CASE("arithmetic: ring mismatch is rejected") {
  auto r1 = PolynomialRing::make({"x"});
  auto r2 = PolynomialRing::make({"y"});
  CHECK_THROWS_AS(Polynomial::variable(r1, 0) + Polynomial::variable(r2, 0), RingMismatchError);
}

TEST_CASE("derivative: hand-computed oracles") {
  auto ring = PolynomialRing::make({"y1", "y2"});
  // d/dy2 [y2 (1-y2)^2] = 1 - 4 y2 + 3 y2^2
  Polynomial y2 = Polynomial::variable(ring, 1);
  Polynomial f = y2 * (Polynomial::one(ring) - y2).pow(2);
  CHECK(f.derivative(1) == parse_polynomial(ring, "1 - 4*y2 + 3*y2^2"));
  CHECK(Polynomial::constant(ring, Rational(7, 3)).derivative(0).is_zero());

  auto m = PolynomialRing::make({"a", "b", "c", "d"});
  CHECK(parse_polynomial(m, "a*d - b*c").derivative(0) == Polynomial::variable(m, 3));
}

TEST_CASE("substitute: invariance of the determinant under the shear") {
  auto ring = PolynomialRing::make({"a", "b", "c", "d"});
  auto ext = ring->extended({"lam"});
  Polynomial det = parse_polynomial(ring, "a*d - b*c");
  std::vector<Polynomial> shear = {
      parse_polynomial(ext, "a + lam*c"),
      parse_polynomial(ext, "b + lam*d"),
      parse_polynomial(ext, "c"),
      parse_polynomial(ext, "d"),
  };
  CHECK(det.substituted(shear) == parse_polynomial(ext, "a*d - b*c"));
}

TEST_CASE("substitute: identity and composition oracle") {
  auto ring = PolynomialRing::make({"x", "y"});
  auto target = PolynomialRing::make({"t"});
  Polynomial x = Polynomial::variable(ring, 0);
  CHECK(x.substituted({Polynomial::variable(ring, 0), Polynomial::variable(ring, 1)}) == x);
  // x^2 + y at x=t^2, y=t^3 -> t^4 + t^3
  Polynomial f = parse_polynomial(ring, "x^2 + y");
  Polynomial t = Polynomial::variable(target, 0);
  CHECK(f.substituted({t.pow(2), t.pow(3)}) == t.pow(4) + t.pow(3));
  CHECK_THROWS_AS(f.substituted({t}), ArityError);
}

TEST_CASE("evaluate: determinant points and rational arithmetic") {
  auto ring = PolynomialRing::make({"a", "b", "c", "d"});
  Polynomial det = parse_polynomial(ring, "a*d - b*c");
  CHECK(det.evaluated({1, 0, 0, 1}) == 1);
  CHECK(det.evaluated({1, 2, 3, 6}) == 0);
  auto r2 = PolynomialRing::make({"x", "y"});
  CHECK(parse_polynomial(r2, "x^2 + y").evaluated({Rational(1, 2), Rational(1, 4)}) ==
        Rational(1, 2));
  CHECK_THROWS_AS(det.evaluated({1, 2}), ArityError);
}

TEST_CASE("property: ring axioms hold exactly on random inputs") {
  auto ring = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(ring, rng);
    Polynomial g = random_poly(ring, rng);
    Polynomial h = random_poly(ring, rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("property: print/parse round trip is the identity") {
  auto ring = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(ring, rng);
    CHECK(parse_polynomial(ring, f.to_string()) == f);
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  auto ring = PolynomialRing::make({"x", "y"});
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(ring, rng);
    Polynomial g = random_poly(ring, rng);
    std::vector<Rational> p = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    CHECK((f * g).evaluated(p) == f.evaluated(p) * g.evaluated(p));
    CHECK((f + g).evaluated(p) == f.evaluated(p) + g.evaluated(p));
  }
}

TEST_CASE("property: derivative is linear and Leibniz") {
  auto ring = PolynomialRing::make({"x", "y"});
  std::mt19937 rng(1234);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(ring, rng);
    Polynomial g = random_poly(ring, rng);
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
      CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
  }
}
