#pragma once

#include <random>
#include <string>
#include <vector>

#include "quotcert/constructible.hpp"

namespace quotcert {

// A polynomial map between affine (or chart-covered quasiaffine) varieties:
// the domain is the union of V(domain) ∩ D(h) over the chart polynomials h.
struct PolynomialMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> components;  // in the source ring, one per target variable
  Ideal domain;                        // in the source ring
  std::vector<Polynomial> charts;      // nonempty; the default chart is [1]

  PolynomialMap(RingPtr source, RingPtr target, std::vector<Polynomial> components,
                Ideal domain, std::vector<Polynomial> charts = {});
};

// Ideal of the Zariski closure of the image.
Ideal image_closure(const PolynomialMap& map);

struct ImageResult {
  ConstructibleSet image;
  // Graph-ring ideals whose projection could not be resolved; empty means the
  // image is exact. A partial answer is still a valid subset of the image.
  std::vector<Ideal> unresolved;

  explicit ImageResult(RingPtr ring) : image(ConstructibleSet::empty_set(std::move(ring))) {}
  bool complete() const { return unresolved.empty(); }
};

// Exact constructible image via the one-variable-at-a-time Extension-Theorem
// recursion; never returns a wrong answer — pieces that stall are reported in
// `unresolved`.
ImageResult constructible_image(const PolynomialMap& map);

// Dimension of the fiber over a rational point; -1 when the fiber is empty.
int fiber_dimension(const PolynomialMap& map, const std::vector<Rational>& point);

struct CandidateVerdict {
  bool pass = true;
  bool sampling_exhausted = false;  // warning: a stratum yielded no rational points
  std::vector<std::string> failures;
  std::size_t domain_points_checked = 0;
  std::size_t image_points_checked = 0;
};

// Independent cross-check of an image candidate: containment in the closure,
// forward sampling of the domain, and fiber checks on samples of S.
CandidateVerdict verify_image_candidate(const PolynomialMap& map, const ConstructibleSet& S,
                                        std::size_t samples, unsigned seed = 20240817);

}  // namespace quotcert
