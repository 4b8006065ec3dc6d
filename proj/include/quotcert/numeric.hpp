#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quotcert {

// Exact arithmetic everywhere: rationals for coefficients, integers for
// cone/lattice data. GMP keeps fractions canonical (reduced, denominator > 0).
using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

Rational rational_pow(const Rational& base, unsigned exp);

// Exact integer n-th root: returns r with r^n == x, if one exists.
std::optional<Int> exact_nth_root(const Int& x, unsigned n);

// Exact rational n-th root (componentwise on the reduced fraction).
std::optional<Rational> exact_nth_root(const Rational& x, unsigned n);

// All divisors of |x|, ascending; empty when |x| exceeds the factoring budget.
std::vector<Int> small_divisors(const Int& x);

std::string to_string(const Rational& q);

}  // namespace quotcert
