#pragma once

#include <optional>
#include <random>
#include <vector>

#include "quotcert/ideal.hpp"

namespace quotcert {

// One locally closed piece V(I) ∖ V(J): points of V(I) where at least one
// generator of J is nonzero. Representation-level only; no canonical form.
struct Stratum {
  Ideal vanishing;
  Ideal nonvanishing;

  Stratum() = default;
  Stratum(Ideal vanish, Ideal avoid)
      : vanishing(std::move(vanish)), nonvanishing(std::move(avoid)) {}

  // Closed stratum V(I) (nothing excluded).
  static Stratum closed(Ideal vanish);
};

// Finite union of strata; equality is extensional (mutual inclusion), not
// representational.
class ConstructibleSet {
 public:
  explicit ConstructibleSet(RingPtr ring) : ring_(std::move(ring)) {}
  ConstructibleSet(RingPtr ring, std::vector<Stratum> strata);

  static ConstructibleSet empty_set(RingPtr ring) { return ConstructibleSet(std::move(ring)); }
  static ConstructibleSet whole_space(RingPtr ring);
  static ConstructibleSet of_variety(Ideal I);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Stratum>& strata() const { return strata_; }

  ConstructibleSet with(Stratum s) const;

 private:
  RingPtr ring_;
  std::vector<Stratum> strata_;
};

bool is_empty(const Stratum& s);
bool is_empty(const ConstructibleSet& S);

// Ideal of the Zariski closure.
Ideal closure_ideal(const Stratum& s);
Ideal closure_ideal(const ConstructibleSet& S);

ConstructibleSet set_union(const ConstructibleSet& S, const ConstructibleSet& T);
ConstructibleSet set_intersection(const ConstructibleSet& S, const ConstructibleSet& T);
// Complement of S inside V(ambient).
ConstructibleSet complement_in(const ConstructibleSet& S, const Ideal& ambient);
ConstructibleSet set_difference(const ConstructibleSet& S, const ConstructibleSet& T);

bool is_subset(const ConstructibleSet& S, const ConstructibleSet& T);
bool sets_equal(const ConstructibleSet& S, const ConstructibleSet& T);

int dimension_of(const ConstructibleSet& S);  // dim of the closure; -1 if empty
int codimension_in(const ConstructibleSet& S, const Ideal& ambient);

// Largest subset of S open in the closure of S.
ConstructibleSet open_kernel(const ConstructibleSet& S);

// Pullback along a polynomial map given by its component list.
ConstructibleSet preimage(const ConstructibleSet& S, const std::vector<Polynomial>& components);

// Exact membership test for a rational point.
bool contains_point(const Stratum& s, const std::vector<Rational>& p);
bool contains_point(const ConstructibleSet& S, const std::vector<Rational>& p);

// Stratum-guided search for rational points: triangularize via a lex basis,
// try structured assignments for the free variables, back-substitute with
// exact univariate root finding. Returns at most `count` distinct points.
struct SampleResult {
  std::vector<std::vector<Rational>> points;
  bool exhausted = false;  // search budget ran out before `count` points
};
SampleResult sample_points(const ConstructibleSet& S, std::size_t count, std::mt19937& rng);
SampleResult sample_points(const Stratum& s, std::size_t count, std::mt19937& rng);

}  // namespace quotcert
