#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quotcert/error.hpp"

namespace quotcert {

// Exponent vector of a monomial; length always equals the ring arity.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

// A named variable set over Q (characteristic 0). Immutable; shared by value
// through RingPtr. Two rings are compatible iff their variable lists match.
class PolynomialRing {
 public:
  static RingPtr make(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  const std::string& variable(std::size_t i) const { return variables_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  bool same_variables(const PolynomialRing& other) const {
    return variables_ == other.variables_;
  }

  // New ring with extra variables appended (names must be fresh).
  RingPtr extended(const std::vector<std::string>& extra) const;

  // New ring keeping only the listed indices, in their current order.
  RingPtr restricted(const std::vector<std::size_t>& keep) const;

  // A variable name based on `stem` that does not collide with this ring.
  std::string fresh_name(const std::string& stem) const;

 private:
  explicit PolynomialRing(std::vector<std::string> variables);
  std::vector<std::string> variables_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

// Total monomial orders. Block orders eliminate the first `block` ring
// variables (graded reverse lexicographic within each block).
struct MonomialOrder {
  enum class Kind { Lex, Grevlex, Block };

  Kind kind = Kind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder block_elim(std::size_t first_block_size) {
    return {Kind::Block, first_block_size};
  }

  // <0, 0, >0 when a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
  bool operator<(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    return block < o.block;
  }
};

// Grevlex comparison independent of any ring, used as the canonical term-map
// order inside Polynomial.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) < 0;
  }
};

bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires divisibility
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

}  // namespace quotcert
