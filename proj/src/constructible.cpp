#include "quotcert/constructible.hpp"

#include <algorithm>
#include <set>

#include "quotcert/error.hpp"

namespace quotcert {

Stratum Stratum::closed(Ideal vanish) {
  RingPtr ring = vanish.ring();
  return Stratum(std::move(vanish), Ideal::unit(ring));
}

namespace {

// Normalizes a stratum: generators of the nonvanishing ideal are reduced
// modulo the vanishing ideal and pieces that cannot contain points are
// dropped. Returns nullopt when the stratum is provably empty.
std::optional<Stratum> simplified(const Stratum& s) {
  if (is_trivial(s.vanishing)) return std::nullopt;
  std::vector<Polynomial> kept;
  std::set<std::string> seen;
  for (const auto& g : s.nonvanishing.generators()) {
    Polynomial r = normal_form(g, s.vanishing);
    if (r.is_zero()) continue;  // g vanishes identically on V(I)
    if (!r.is_constant() && radical_membership(r, s.vanishing)) continue;
    if (r.is_constant()) r = Polynomial::one(g.ring());
    if (seen.insert(r.to_string()).second) kept.push_back(std::move(r));
  }
  if (kept.empty()) return std::nullopt;
  return Stratum(s.vanishing, Ideal(s.vanishing.ring(), std::move(kept)));
}

std::string stratum_key(const Stratum& s) {
  std::vector<std::string> parts;
  for (const auto& g : s.vanishing.generators()) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + "&";
  key += "|";
  parts.clear();
  for (const auto& g : s.nonvanishing.generators()) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  for (const auto& p : parts) key += p + "&";
  return key;
}

}  // namespace

ConstructibleSet::ConstructibleSet(RingPtr ring, std::vector<Stratum> strata)
    : ring_(std::move(ring)) {
  std::set<std::string> seen;
  for (auto& s : strata) {
    require_same_ring(ring_, s.vanishing.ring());
    require_same_ring(ring_, s.nonvanishing.ring());
    auto simple = simplified(s);
    if (!simple) continue;
    if (seen.insert(stratum_key(*simple)).second) strata_.push_back(std::move(*simple));
  }
}

ConstructibleSet ConstructibleSet::whole_space(RingPtr ring) {
  return of_variety(Ideal::zero(std::move(ring)));
}

ConstructibleSet ConstructibleSet::of_variety(Ideal I) {
  RingPtr ring = I.ring();
  return ConstructibleSet(ring, {Stratum::closed(std::move(I))});
}

ConstructibleSet ConstructibleSet::with(Stratum s) const {
  ConstructibleSet r = *this;
  if (!is_empty(s)) r.strata_.push_back(std::move(s));
  return r;
}

bool is_empty(const Stratum& s) {
  // V(I) ∖ V(J) is empty iff every chart V(I) ∩ D(g), g ∈ J, is empty, i.e.
  // every generator of J vanishes on V(I).
  if (s.nonvanishing.generators().empty()) return true;  // V(J)=V(0) is everything
  for (const auto& g : s.nonvanishing.generators())
    if (!radical_membership(g, s.vanishing)) return false;
  return true;
}

bool is_empty(const ConstructibleSet& S) {
  for (const auto& s : S.strata())
    if (!is_empty(s)) return false;
  return true;
}

Ideal closure_ideal(const Stratum& s) {
  // Closure of ∪_g V(I)∩D(g) = union of the per-chart closures, so the ideal
  // is the intersection of the saturations.
  if (is_empty(s)) return Ideal::unit(s.vanishing.ring());
  std::optional<Ideal> acc;
  for (const auto& g : s.nonvanishing.generators()) {
    if (g.is_zero()) continue;
    Ideal part = g.is_constant() ? s.vanishing : saturation(s.vanishing, g);
    if (is_trivial(part)) continue;
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return acc ? *acc : Ideal::unit(s.vanishing.ring());
}

Ideal closure_ideal(const ConstructibleSet& S) {
  std::optional<Ideal> acc;
  for (const auto& s : S.strata()) {
    Ideal part = closure_ideal(s);
    if (is_trivial(part)) continue;
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return acc ? *acc : Ideal::unit(S.ring());
}

ConstructibleSet set_union(const ConstructibleSet& S, const ConstructibleSet& T) {
  require_same_ring(S.ring(), T.ring());
  std::vector<Stratum> strata = S.strata();
  strata.insert(strata.end(), T.strata().begin(), T.strata().end());
  return ConstructibleSet(S.ring(), std::move(strata));
}

ConstructibleSet set_intersection(const ConstructibleSet& S, const ConstructibleSet& T) {
  require_same_ring(S.ring(), T.ring());
  std::vector<Stratum> strata;
  for (const auto& a : S.strata()) {
    for (const auto& b : T.strata()) {
      Ideal vanish = a.vanishing.with_extra(b.vanishing.generators());
      // Some generator of each nonvanishing ideal must be nonzero, which is
      // exactly: some pairwise product is nonzero.
      std::vector<Polynomial> products;
      for (const auto& g : a.nonvanishing.generators())
        for (const auto& h : b.nonvanishing.generators()) products.push_back(g * h);
      strata.emplace_back(vanish, Ideal(S.ring(), std::move(products)));
    }
  }
  return ConstructibleSet(S.ring(), std::move(strata));
}

ConstructibleSet complement_in(const ConstructibleSet& S, const Ideal& ambient) {
  require_same_ring(S.ring(), ambient.ring());
  // Complement of one stratum V(I)∖V(J) inside V(A):
  //   (V(A) ∖ V(I))  ∪  V(A + J)
  // with one stratum per generator of I. Intersect over the strata of S.
  std::optional<ConstructibleSet> acc;
  if (S.strata().empty()) return ConstructibleSet::of_variety(ambient);
  for (const auto& s : S.strata()) {
    std::vector<Stratum> pieces;
    for (const auto& f : s.vanishing.generators())
      pieces.emplace_back(ambient, Ideal(S.ring(), {f}));
    pieces.push_back(
        Stratum::closed(ambient.with_extra(s.nonvanishing.generators())));
    ConstructibleSet piece_set(S.ring(), std::move(pieces));
    acc = acc ? set_intersection(*acc, piece_set) : piece_set;
  }
  return *acc;
}

ConstructibleSet set_difference(const ConstructibleSet& S, const ConstructibleSet& T) {
  require_same_ring(S.ring(), T.ring());
  return set_intersection(S, complement_in(T, Ideal::zero(S.ring())));
}

bool is_subset(const ConstructibleSet& S, const ConstructibleSet& T) {
  return is_empty(set_difference(S, T));
}

bool sets_equal(const ConstructibleSet& S, const ConstructibleSet& T) {
  return is_subset(S, T) && is_subset(T, S);
}

int dimension_of(const ConstructibleSet& S) { return dimension(closure_ideal(S)); }

int codimension_in(const ConstructibleSet& S, const Ideal& ambient) {
  return dimension(ambient) - dimension_of(S);
}

ConstructibleSet open_kernel(const ConstructibleSet& S) {
  if (is_empty(S)) return ConstructibleSet::empty_set(S.ring());
  Ideal bar = closure_ideal(S);
  ConstructibleSet boundary =
      set_difference(ConstructibleSet::of_variety(bar), S);
  Ideal boundary_bar = closure_ideal(boundary);
  // S minus the closure of (closure(S) ∖ S).
  return set_difference(S, ConstructibleSet::of_variety(boundary_bar));
}

ConstructibleSet preimage(const ConstructibleSet& S, const std::vector<Polynomial>& components) {
  if (components.size() != S.ring()->arity())
    throw ArityError("preimage: map has wrong number of components");
  if (components.empty()) throw ArityError("preimage: empty map");
  RingPtr source = components.front().ring();
  for (const auto& c : components) require_same_ring(source, c.ring());

  std::vector<Stratum> strata;
  for (const auto& s : S.strata()) {
    std::vector<Polynomial> vanish, avoid;
    for (const auto& g : s.vanishing.generators()) vanish.push_back(g.substituted(components));
    for (const auto& g : s.nonvanishing.generators()) avoid.push_back(g.substituted(components));
    strata.emplace_back(Ideal(source, std::move(vanish)), Ideal(source, std::move(avoid)));
  }
  return ConstructibleSet(source, std::move(strata));
}

bool contains_point(const Stratum& s, const std::vector<Rational>& p) {
  for (const auto& g : s.vanishing.generators())
    if (g.evaluated(p) != 0) return false;
  for (const auto& g : s.nonvanishing.generators())
    if (g.evaluated(p) != 0) return true;
  return false;
}

bool contains_point(const ConstructibleSet& S, const std::vector<Rational>& p) {
  for (const auto& s : S.strata())
    if (contains_point(s, p)) return true;
  return false;
}

}  // namespace quotcert
