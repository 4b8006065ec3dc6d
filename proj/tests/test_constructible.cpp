#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quotcert/constructible.hpp"

using namespace quotcert;

namespace {

Polynomial pp(const RingPtr& ring, const std::string& s) { return parse_polynomial(ring, s); }

Ideal ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(pp(ring, s));
  return Ideal(ring, std::move(ps));
}

Stratum stratum(const RingPtr& ring, const std::vector<std::string>& vanish,
                const std::vector<std::string>& avoid) {
  return Stratum(ideal(ring, vanish), ideal(ring, avoid));
}

// The image of Example 4.1's invariant map, straight from the paper:
// (A^3 ∖ V(u)) ∪ (A^3 ∖ V(v)) ∪ {0}.
ConstructibleSet ex41_image(const RingPtr& ring) {
  return ConstructibleSet(
      ring, {stratum(ring, {}, {"u"}), stratum(ring, {}, {"v"}),
             Stratum::closed(ideal(ring, {"u", "v", "w"}))});
}

}  // namespace

TEST_CASE("emptiness: point-set oracle cases") {
  auto ring = PolynomialRing::make({"x", "y"});
  CHECK(is_empty(stratum(ring, {"x"}, {"x"})));
  CHECK(is_empty(stratum(ring, {"x^2"}, {"x"})));
  // V(xy) ∖ V(x): the point (1,0) survives.
  Stratum s = stratum(ring, {"x*y"}, {"x"});
  CHECK_FALSE(is_empty(s));
  CHECK(contains_point(s, {1, 0}));
  CHECK_FALSE(contains_point(s, {0, 1}));
}

TEST_CASE("closure: dense image, open piece of a line, punctured axis") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  CHECK(closure_ideal(ex41_image(ring)).generators().empty());

  auto r2 = PolynomialRing::make({"x", "y"});
  Ideal c = closure_ideal(stratum(r2, {"x"}, {"y"}));
  REQUIRE(c.generators().size() == 1);
  CHECK(c.generators().front() == pp(r2, "x"));

  Ideal axis = closure_ideal(stratum(ring, {"u", "v"}, {"w"}));
  CHECK(varieties_equal(axis, ideal(ring, {"u", "v"})));
}

TEST_CASE("boolean ops: Example 4.1 difference and basic laws") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  ConstructibleSet Y = ex41_image(ring);
  ConstructibleSet all = ConstructibleSet::whole_space(ring);

  ConstructibleSet C = set_difference(all, Y);
  ConstructibleSet expected(ring, {stratum(ring, {"u", "v"}, {"w"})});
  CHECK(sets_equal(C, expected));

  CHECK(sets_equal(set_union(Y, ConstructibleSet::empty_set(ring)), Y));

  auto r2 = PolynomialRing::make({"x", "y"});
  ConstructibleSet a(r2, {stratum(r2, {"x"}, {"y"})});
  ConstructibleSet b(r2, {stratum(r2, {"y"}, {"x"})});
  CHECK(is_empty(set_intersection(a, b)));
}

TEST_CASE("subset and equality: Example 4.1 point checks") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  ConstructibleSet Y = ex41_image(ring);
  ConstructibleSet origin(ring, {Stratum::closed(ideal(ring, {"u", "v", "w"}))});
  CHECK(is_subset(origin, Y));
  CHECK(sets_equal(Y, Y));
  ConstructibleSet axis(ring, {stratum(ring, {"u", "v"}, {"w"})});
  CHECK_FALSE(is_subset(axis, Y));
}

TEST_CASE("dimension and codimension certificates") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  ConstructibleSet axis(ring, {stratum(ring, {"u", "v"}, {"w"})});
  CHECK(dimension_of(axis) == 1);
  CHECK(codimension_in(axis, Ideal::zero(ring)) == 2);
  CHECK(dimension_of(ConstructibleSet::whole_space(ring)) == 3);
  // SL(2) boundary {d12 = d13 = 0, d23 != 0} in coordinates (u,v,w) =
  // (d12, d23, d13): closure is the d23-axis.
  ConstructibleSet sl2_boundary(ring, {stratum(ring, {"u", "w"}, {"v"})});
  CHECK(codimension_in(sl2_boundary, Ideal::zero(ring)) == 2);
}

TEST_CASE("open kernel: Example 4.1 loses the origin") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  ConstructibleSet Y = ex41_image(ring);
  ConstructibleSet kernel = open_kernel(Y);
  // The paper's V: A^3 ∖ V(u,v).
  ConstructibleSet V(ring, {stratum(ring, {}, {"u", "v"})});
  CHECK(sets_equal(kernel, V));
  CHECK_FALSE(sets_equal(kernel, Y));

  // Closed sets are open in their closure.
  ConstructibleSet closed(ring, {Stratum::closed(ideal(ring, {"u"}))});
  CHECK(sets_equal(open_kernel(closed), closed));

  // SL(2) image: open kernel drops the origin stratum.
  ConstructibleSet sl2(ring, {stratum(ring, {}, {"u", "w"}),
                              Stratum::closed(ideal(ring, {"u", "v", "w"}))});
  ConstructibleSet sl2_kernel(ring, {stratum(ring, {}, {"u", "w"})});
  CHECK(sets_equal(open_kernel(sl2), sl2_kernel));
}

TEST_CASE("preimage: Example 4.1 maximal locus upstairs") {
  auto target = PolynomialRing::make({"u", "v", "w"});
  auto source = PolynomialRing::make({"a", "b", "c", "d"});
  std::vector<Polynomial> inv = {pp(source, "c"), pp(source, "d"), pp(source, "a*d - b*c")};

  ConstructibleSet V(target, {stratum(target, {}, {"u", "v"})});
  ConstructibleSet up = preimage(V, inv);
  ConstructibleSet expected(source, {Stratum(Ideal::zero(source), ideal(source, {"c", "d"}))});
  CHECK(sets_equal(up, expected));

  CHECK(is_empty(preimage(ConstructibleSet::empty_set(target), inv)));

  ConstructibleSet W(target, {Stratum::closed(ideal(target, {"w"}))});
  ConstructibleSet pre = preimage(W, inv);
  ConstructibleSet det(source, {Stratum::closed(ideal(source, {"a*d - b*c"}))});
  CHECK(sets_equal(pre, det));
}

TEST_CASE("property: closure is extensive and stable") {
  auto ring = PolynomialRing::make({"x", "y"});
  std::vector<ConstructibleSet> corpus = {
      ConstructibleSet(ring, {stratum(ring, {"x*y"}, {"x"})}),
      ConstructibleSet(ring, {stratum(ring, {"x"}, {"y"}), stratum(ring, {"y"}, {"x"})}),
      ConstructibleSet(ring, {stratum(ring, {}, {"x"})}),
  };
  for (const auto& S : corpus) {
    Ideal bar = closure_ideal(S);
    CHECK(is_subset(S, ConstructibleSet::of_variety(bar)));
    CHECK(varieties_equal(closure_ideal(ConstructibleSet::of_variety(bar)), bar));
  }
}

TEST_CASE("property: De Morgan laws hold extensionally") {
  auto ring = PolynomialRing::make({"x", "y"});
  std::vector<ConstructibleSet> sets = {
      ConstructibleSet(ring, {stratum(ring, {"x"}, {"y"})}),
      ConstructibleSet(ring, {stratum(ring, {"x*y"}, {"x"}), Stratum::closed(ideal(ring, {"y"}))}),
      ConstructibleSet(ring, {stratum(ring, {}, {"x"})}),
      ConstructibleSet::whole_space(ring),
  };
  Ideal ambient = Ideal::zero(ring);
  for (const auto& S : sets) {
    for (const auto& T : sets) {
      auto lhs = complement_in(set_union(S, T), ambient);
      auto rhs = set_intersection(complement_in(S, ambient), complement_in(T, ambient));
      CHECK(sets_equal(lhs, rhs));
      auto lhs2 = complement_in(set_intersection(S, T), ambient);
      auto rhs2 = set_union(complement_in(S, ambient), complement_in(T, ambient));
      CHECK(sets_equal(lhs2, rhs2));
    }
  }
}

TEST_CASE("property: open kernel is open in the closure") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  std::vector<ConstructibleSet> corpus = {
      ex41_image(ring),
      ConstructibleSet(ring, {stratum(ring, {"u*v"}, {"u"})}),
      ConstructibleSet(ring, {Stratum::closed(ideal(ring, {"u", "v"}))}),
  };
  for (const auto& S : corpus) {
    ConstructibleSet K = open_kernel(S);
    CHECK(is_empty(set_difference(K, S)));
    if (!is_empty(K)) {
      // Kernel of these corpus sets is dense in the closure.
      CHECK(varieties_equal(closure_ideal(K), closure_ideal(S)));
    }
  }
}

TEST_CASE("sampling: members found and membership agrees with semantics") {
  auto ring = PolynomialRing::make({"u", "v", "w"});
  ConstructibleSet Y = ex41_image(ring);
  std::mt19937 rng(2024);
  auto sample = sample_points(Y, 100, rng);
  CHECK(sample.points.size() == 100);
  for (const auto& p : sample.points) CHECK(contains_point(Y, p));

  // The cusp: sampling finds rational points of V(u^3 - v^2) via the
  // perfect-power pool.
  auto r2 = PolynomialRing::make({"u", "v"});
  ConstructibleSet cusp(r2, {Stratum::closed(ideal(r2, {"u^3 - v^2"}))});
  auto cusp_sample = sample_points(cusp, 50, rng);
  CHECK(cusp_sample.points.size() == 50);
  for (const auto& p : cusp_sample.points)
    CHECK(rational_pow(p[0], 3) == rational_pow(p[1], 2));
}
