#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quotcert/error.hpp"
#include "quotcert/ideal.hpp"

using namespace quotcert;

namespace {

Polynomial pp(const RingPtr& ring, const std::string& s) { return parse_polynomial(ring, s); }

Ideal ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(pp(ring, s));
  return Ideal(ring, std::move(ps));
}

// Buchberger certificate: every S-polynomial of the basis reduces to zero.
bool buchberger_certificate(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& [lmi, lci] = basis[i].leading_term(order);
      const auto& [lmj, lcj] = basis[j].leading_term(order);
      Monomial l = monomial_lcm(lmi, lmj);
      Polynomial s = basis[i].term_multiplied(monomial_div(l, lmi), Rational(1) / lci) -
                     basis[j].term_multiplied(monomial_div(l, lmj), Rational(1) / lcj);
      if (!normal_form(s, basis, order).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::string> printed(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("groebner: lex basis completed by hand for (x^2-y, xy-x)") {
  // Brute-force S-polynomial completion by hand gives {x^2-y, xy-x, y^2-y}.
  auto ring = PolynomialRing::make({"x", "y"});
  Ideal I = ideal(ring, {"x^2 - y", "x*y - x"});
  auto gb = I.groebner_basis(MonomialOrder::lex());
  std::vector<std::string> got = printed(gb);
  std::sort(got.begin(), got.end());
  std::vector<std::string> want = {"x*y - x", "x^2 - y", "y^2 - y"};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(buchberger_certificate(gb, MonomialOrder::lex()));
}

TEST_CASE("groebner: principal ideal is already reduced") {
  auto ring = PolynomialRing::make({"x", "y"});
  auto gb = ideal(ring, {"x"}).groebner_basis(MonomialOrder::grevlex());
  REQUIRE(gb.size() == 1);
  CHECK(gb.front().to_string() == "x");
}

TEST_CASE("groebner: inconsistent system collapses to 1") {
  auto ring = PolynomialRing::make({"x"});
  auto gb = ideal(ring, {"x - 1", "x"}).groebner_basis(MonomialOrder::grevlex());
  REQUIRE(gb.size() == 1);
  CHECK(gb.front().is_one());
  CHECK(is_trivial(ideal(ring, {"x - 1", "x"})));
}

TEST_CASE("groebner: step cap raises an explicit error") {
  auto ring = PolynomialRing::make({"x", "y", "z"});
  auto old = groebner_step_cap();
  set_groebner_step_cap(1);
  CHECK_THROWS_AS(ideal(ring, {"x^2 - y*z + 3", "y^3 - x*z", "z^2 - x*y"})
                      .groebner_basis(MonomialOrder::lex()),
                  ResourceLimitError);
  set_groebner_step_cap(old);
}

TEST_CASE("normal form: membership and division oracles") {
  auto m = PolynomialRing::make({"a", "b", "c", "d"});
  Ideal det = ideal(m, {"a*d - b*c"});
  CHECK(normal_form(pp(m, "a*d - b*c"), det).is_zero());

  auto ring = PolynomialRing::make({"x", "y"});
  Ideal I = ideal(ring, {"x^2 - y"});
  CHECK(normal_form(pp(ring, "y"), I, MonomialOrder::lex()) == pp(ring, "y"));
  CHECK(normal_form(pp(ring, "x^2"), I, MonomialOrder::lex()) == pp(ring, "y"));
}

TEST_CASE("elimination: cusp, no-op, and dense image") {
  auto ring = PolynomialRing::make({"t", "u", "v"});
  Ideal I = ideal(ring, {"u - t^2", "v - t^3"});
  Ideal J = elimination_ideal(I, {1, 2});
  REQUIRE(J.generators().size() == 1);
  CHECK(J.generators().front() == pp(J.ring(), "u^3 - v^2"));

  Ideal no_op = elimination_ideal(I, {0, 1, 2});
  CHECK(no_op.generators().size() == 2);

  // Graph of (a,b,c,d) -> (c,d,ad-bc): the image closure is all of A^3.
  auto g = PolynomialRing::make({"a", "b", "c", "d", "u", "v", "w"});
  Ideal graph = ideal(g, {"u - c", "v - d", "w - (a*d - b*c)"});
  Ideal img = elimination_ideal(graph, {4, 5, 6});
  CHECK(img.generators().empty());
}

TEST_CASE("saturation: monomial, nilpotent, and unit-on-chart cases") {
  auto ring = PolynomialRing::make({"x", "y"});
  Ideal I = ideal(ring, {"x*y"});
  Ideal S = saturation(I, pp(ring, "x"));
  REQUIRE(S.generators().size() == 1);
  CHECK(S.generators().front() == pp(ring, "y"));

  // V(x^2) is contained in V(x), so (x^2 : x^inf) = (1).
  CHECK(is_trivial(saturation(ideal(ring, {"x^2"}), pp(ring, "x"))));

  // x is invertible on the hyperbola: saturation changes nothing.
  Ideal H = ideal(ring, {"x*y - 1"});
  Ideal Hs = saturation(H, pp(ring, "x"));
  CHECK(varieties_equal(H, Hs));
  REQUIRE(Hs.generators().size() == 1);
  CHECK(Hs.generators().front() == pp(ring, "x*y - 1"));
}

TEST_CASE("radical membership, triviality, intersection") {
  auto ring = PolynomialRing::make({"x", "y"});
  CHECK(radical_membership(pp(ring, "x"), ideal(ring, {"x^2"})));
  CHECK_FALSE(radical_membership(pp(ring, "y"), ideal(ring, {"x^2"})));
  CHECK(is_trivial(ideal(ring, {"x", "x - 1"})));
  Ideal inter = ideal_intersection(ideal(ring, {"x"}), ideal(ring, {"y"}));
  REQUIRE(inter.generators().size() == 1);
  CHECK(inter.generators().front() == pp(ring, "x*y"));
}

TEST_CASE("ideal quotient: ((xy) : (y)) = (x)") {
  auto ring = PolynomialRing::make({"x", "y"});
  Ideal Q = ideal_quotient(ideal(ring, {"x*y"}), ideal(ring, {"y"}));
  REQUIRE(Q.generators().size() == 1);
  CHECK(Q.generators().front() == pp(ring, "x"));
}

TEST_CASE("dimension: whole space, a line, and the Roberts origin fiber") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  CHECK(dimension(Ideal::zero(ring)) == 3);
  CHECK(dimension(ideal(ring, {"u", "v"})) == 1);
  CHECK(dimension(Ideal::unit(ring)) == -1);

  // Roberts scenario with m = 2: adjoining x=y=z=0 to the six invariants
  // leaves the coordinate subspace {x=y=z=0} of dimension 4 in A^7.
  auto r7 = PolynomialRing::make({"x", "y", "z", "s", "t", "u", "v"});
  Ideal fiber = ideal(r7, {"x", "y", "z", "x*v - (y*z)^2*s", "y*v - (x*z)^2*t",
                           "z*v - (x*y)^2*u"});
  CHECK(dimension(fiber) == 4);
}

TEST_CASE("components: hyperplane pair, irreducible line, boundary axis") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  auto comps = minimal_components(ideal(ring, {"u*v"}));
  REQUIRE(comps.size() == 2);
  std::vector<std::string> got;
  for (const auto& c : comps) {
    REQUIRE(c.generators().size() == 1);
    got.push_back(c.generators().front().to_string());
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"u", "v"});

  auto comps2 = minimal_components(ideal(ring, {"u", "v"}));
  REQUIRE(comps2.size() == 1);
  CHECK(varieties_equal(comps2.front(), ideal(ring, {"u", "v"})));
  CHECK(dimension(comps2.front()) == 1);
}

TEST_CASE("components: squarefree reduction and point splitting") {
  auto ring = PolynomialRing::make({"x", "y"});
  // V(x^2 y) = V(x) u V(y)
  auto comps = minimal_components(ideal(ring, {"x^2*y"}));
  CHECK(comps.size() == 2);
  // V(x^2 - 1) = {x=1} u {x=-1}
  auto pts = minimal_components(ideal(ring, {"x^2 - 1"}));
  CHECK(pts.size() == 2);
  // embedded component dropped: V((x)*(x,y)) = V(x)
  auto embedded = minimal_components(ideal(ring, {"x^2", "x*y"}));
  REQUIRE(embedded.size() == 1);
  CHECK(varieties_equal(embedded.front(), ideal(ring, {"x"})));
}

TEST_CASE("gcd and squarefree helpers") {
  auto ring = PolynomialRing::make({"x", "y"});
  Polynomial f = pp(ring, "x^2 - y^2");
  Polynomial g = pp(ring, "x^2 + 2*x*y + y^2");
  Polynomial d = poly_gcd(f, g);
  CHECK(d == pp(ring, "x + y"));
  CHECK(squarefree_part(pp(ring, "x^2 + 2*x*y + y^2")) == pp(ring, "x + y"));
  CHECK(*exact_divide(pp(ring, "x^2 - y^2"), pp(ring, "x - y")) == pp(ring, "x + y"));
  CHECK_FALSE(exact_divide(pp(ring, "x^2 - y^2"), pp(ring, "x - 1")).has_value());
  auto roots = rational_roots(pp(ring, "2*x^2 - x - 1"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-1, 2));
  CHECK(roots[1] == 1);
}

TEST_CASE("property: Buchberger certificate on random ideals") {
  auto ring = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> expo(0, 2);
  std::uniform_int_distribution<int> nterms(1, 3);
  auto rand_poly = [&]() {
    Polynomial p(ring);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      Monomial m(3, 0);
      for (auto& e : m) e = expo(rng);
      int c = coeff(rng);
      if (c != 0) p += Polynomial::term(ring, m, c);
    }
    return p;
  };
  int done = 0;
  for (int i = 0; done < 40 && i < 200; ++i) {
    Ideal I(ring, {rand_poly(), rand_poly()});
    for (const auto& order :
         {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elim(1)}) {
      auto gb = I.groebner_basis(order);
      CHECK(buchberger_certificate(gb, order));
      // Membership: random combinations of the generators normal-form to 0.
      Polynomial combo(ring);
      for (const auto& g : I.generators()) combo += g * rand_poly();
      CHECK(normal_form(combo, I, order).is_zero());
    }
    ++done;
  }
}

TEST_CASE("property: saturation is idempotent") {
  auto ring = PolynomialRing::make({"x", "y"});
  std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"x*y"}, "x"}, {{"x^2*y - y"}, "y"}, {{"x^2 - y^2", "x*y"}, "x + y"}, {{"x^3*y^2"}, "x*y"}};
  for (const auto& [gens, f] : cases) {
    Ideal I = ideal(ring, gens);
    Polynomial p = pp(ring, f);
    Ideal s1 = saturation(I, p);
    Ideal s2 = saturation(s1, p);
    // ideal equality via mutual membership
    bool eq = true;
    for (const auto& g : s1.generators()) eq = eq && ideal_contains(s2, g);
    for (const auto& g : s2.generators()) eq = eq && ideal_contains(s1, g);
    CHECK(eq);
  }
}

TEST_CASE("property: dimension is antitone under inclusion") {
  auto ring = PolynomialRing::make({"x", "y", "z"});
  Ideal small = ideal(ring, {"x"});
  Ideal big = ideal(ring, {"x", "y*z - 1"});
  CHECK(dimension(small) >= dimension(big));
  CHECK(dimension(Ideal::zero(ring)) == 3);
}
