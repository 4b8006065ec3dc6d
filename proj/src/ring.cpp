#include "quotcert/ring.hpp"

#include <algorithm>
#include <set>

namespace quotcert {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

PolynomialRing::PolynomialRing(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

RingPtr PolynomialRing::make(std::vector<std::string> variables) {
  if (variables.empty()) throw Error("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  return RingPtr(new PolynomialRing(std::move(variables)));
}

std::optional<std::size_t> PolynomialRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolynomialRing::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = variables_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(std::move(vars));
}

RingPtr PolynomialRing::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> vars;
  vars.reserve(keep.size());
  for (std::size_t i : keep) vars.push_back(variables_[i]);
  return make(std::move(vars));
}

std::string PolynomialRing::fresh_name(const std::string& stem) const {
  if (!index_of(stem)) return stem;
  for (unsigned k = 0;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!index_of(candidate)) return candidate;
  }
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_variables(*b))
    throw RingMismatchError("operands live in different polynomial rings");
}

namespace {

// Graded reverse lexicographic on a contiguous exponent range.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int grevlex_compare(const Monomial& a, const Monomial& b) {
  return grevlex_range(a, b, 0, a.size());
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex:
      return lex_range(a, b, 0, a.size());
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::Block: {
      std::size_t split = std::min(block, a.size());
      if (int c = grevlex_range(a, b, 0, split)) return c;
      return grevlex_range(a, b, split, a.size());
    }
  }
  return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace quotcert
