#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quotcert/numeric.hpp"
#include "quotcert/ring.hpp"

namespace quotcert {

// Sparse multivariate polynomial over Q in canonical form: a term map with no
// zero coefficients, iterated in grevlex order. Immutable in spirit — every
// operation returns a fresh value.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexLess>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // The constant value when is_constant(); 0 for the zero polynomial.
  Rational constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  unsigned degree() const;                      // total degree; 0 for zero poly
  unsigned degree_in(std::size_t var) const;    // max exponent of one variable
  bool involves(std::size_t var) const;

  // Leading term with respect to an arbitrary order (linear scan).
  const std::pair<const Monomial, Rational>& leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  Polynomial scaled(const Rational& c) const;
  Polynomial term_multiplied(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned exp) const;

  // Leading coefficient normalized to 1 (Groebner-facing canonical form).
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  Polynomial derivative(std::size_t var) const;

  // Composition: bindings[i] replaces variable i; all bindings share one
  // target ring. Every variable must be bound.
  Polynomial substituted(const std::vector<Polynomial>& bindings) const;

  Rational evaluated(const std::vector<Rational>& point) const;

  // Re-express in `target`. `index_map[i]` is the target index of source
  // variable i, or npos when the variable is dropped (it must not occur).
  static constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
  Polynomial mapped_to(const RingPtr& target, const std::vector<std::size_t>& index_map) const;

  std::string to_string() const;

 private:
  void insert_term(const Monomial& m, const Rational& c);

  RingPtr ring_;
  TermMap terms_;
};

// Parses the ASCII polynomial grammar:
//   expr     := '-'? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-int)?
//   base     := variable | rational | '(' expr ')'
//   rational := int ('/' positive-int)?
// No implicit multiplication; whitespace is insignificant.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace quotcert
