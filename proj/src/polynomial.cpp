#include "quotcert/polynomial.hpp"

#include <sstream>

#include "quotcert/error.hpp"

namespace quotcert {

Polynomial::Polynomial(RingPtr ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->arity())
      throw ArityError("monomial length does not match ring arity");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Monomial(p.ring_->arity(), 0), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(std::move(ring));
  Monomial m(p.ring_->arity(), 0);
  m.at(index) = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->arity()) throw ArityError("monomial length does not match ring arity");
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term(
    const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  return leading_term(order).first;
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) insert_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(ring_, rhs.ring_);
  for (const auto& [m, c] : rhs.terms_) insert_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial r = *this;
  r += rhs;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial r = *this;
  r -= rhs;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_ring(ring_, rhs.ring_);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) r.insert_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::term_multiplied(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(monomial_mul(mm, m), k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial result = Polynomial::one(ring_);
  Polynomial base = *this;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const Rational& lc = leading_term(order).second;
  return lc == 1 ? *this : scaled(Rational(1) / lc);
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  require_same_ring(ring_, rhs.ring_);
  return terms_ == rhs.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->arity()) throw UnknownVariableError("#" + std::to_string(var), 0);
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.insert_term(d, c * Rational(m[var]));
  }
  return r;
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& bindings) const {
  if (bindings.size() != ring_->arity())
    throw ArityError("substitution must bind every ring variable");
  if (bindings.empty()) throw ArityError("no bindings");
  RingPtr target = bindings.front().ring();
  for (const auto& b : bindings) require_same_ring(target, b.ring());

  // Powers are cached per variable; corpus exponents are small.
  std::vector<std::vector<Polynomial>> powers(bindings.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * bindings[var]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t = t * power(v, m[v]);
    result += t;
  }
  return result;
}

Rational Polynomial::evaluated(const std::vector<Rational>& point) const {
  if (point.size() != ring_->arity()) throw ArityError("point length does not match ring arity");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t *= rational_pow(point[v], m[v]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::mapped_to(const RingPtr& target,
                                 const std::vector<std::size_t>& index_map) const {
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->arity(), 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (index_map[v] == kDropped)
        throw Error("polynomial involves a variable dropped by the ring map");
      t[index_map[v]] = m[v];
    }
    r.insert_term(t, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading (grevlex-largest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool constant_monomial = total_degree(m) == 0;
    if (mag != 1 || constant_monomial) {
      out << mag.str();
      if (!constant_monomial) out << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << ring_->variable(v);
      if (m[v] > 1) out << "^" << m[v];
    }
  }
  return out.str();
}

}  // namespace quotcert
