#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "quotcert/polynomial.hpp"

namespace quotcert {

// Global Groebner step budget (lead-term reductions per basis computation).
// Overridable via QUOTCERT_STEP_CAP in the CLI.
std::uint64_t groebner_step_cap();
void set_groebner_step_cap(std::uint64_t cap);

struct EngineStats {
  std::uint64_t groebner_runs = 0;
  std::uint64_t max_basis_size = 0;
};
EngineStats engine_stats();
void reset_engine_stats();

// Finitely generated ideal with a thread-safe memo of reduced Groebner bases.
// Generators are immutable after construction; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced Groebner basis: monic, pairwise head-irreducible, fully
  // tail-reduced, sorted ascending by leading monomial. Deterministic.
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

  Ideal with_extra(const std::vector<Polynomial>& more) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       const MonomialOrder& order = MonomialOrder::grevlex());

bool ideal_contains(const Ideal& I, const Polynomial& f);

// I ∩ Q[keep]; the result lives in the subring on the kept variables.
Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep);

// Full reduced basis for the block order that eliminates the given variables,
// expressed back in the original ring.
std::vector<Polynomial> groebner_elimination_basis(const Ideal& I,
                                                   const std::vector<std::size_t>& eliminate);

// Same computation but re-expressed in the original ring (the eliminated
// variables simply no longer occur).
Ideal elimination_in_ring(const Ideal& I, const std::vector<std::size_t>& eliminate);

// (I : f^infinity) via the extra-variable trick.
Ideal saturation(const Ideal& I, const Polynomial& f);

Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

bool is_trivial(const Ideal& I);

// True iff f vanishes on V(I) over the algebraic closure (Rabinowitsch).
bool radical_membership(const Polynomial& f, const Ideal& I);

// V(A) ⊆ V(B) over the algebraic closure.
bool variety_subset(const Ideal& A, const Ideal& B);
bool varieties_equal(const Ideal& A, const Ideal& B);

// Krull dimension of V(I) over the algebraic closure; -1 when empty.
int dimension(const Ideal& I);

// A maximum independent variable set modulo the leading-term ideal (empty
// when V(I) is empty). Its size equals dimension(I) for nonempty varieties.
std::vector<std::size_t> independent_set(const Ideal& I);

struct ComponentSplit {
  std::vector<Ideal> components;
  bool complete = true;  // false: some piece may still be reducible
};

// Irreducible components of V(I) over Q by recursive factor-splitting.
// Throws DecompositionIncompleteError when splitting stalls on a piece that
// is provably reducible; otherwise unsplittable pieces are returned as-is.
std::vector<Ideal> minimal_components(const Ideal& I);

// Pieces plus a flag per piece: true when irreducibility is certified
// (linear ideals and similar safe cases). Used by certify to stay honest.
struct ComponentInfo {
  Ideal ideal;
  int dim = 0;
  bool certified_irreducible = false;
};
std::vector<ComponentInfo> minimal_components_info(const Ideal& I);

// One visible-factor split of V(I) into strictly smaller closed sets, when a
// generator factors. Used by the image recursion to unstick descent.
std::optional<std::vector<Ideal>> split_once(const Ideal& I);

// --- polynomial gcd layer (used by the component splitter) ---

// Exact quotient, or nullopt when g does not divide f.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// Gcd in Q[x...], monic under grevlex; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Product of the distinct irreducible factors (char 0).
Polynomial squarefree_part(const Polynomial& f);

// Distinct rational roots of a univariate polynomial (it may be constant or
// involve exactly one variable).
std::vector<Rational> rational_roots(const Polynomial& f);

}  // namespace quotcert
