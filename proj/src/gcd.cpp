#include <algorithm>
#include <map>

#include "quotcert/error.hpp"
#include "quotcert/ideal.hpp"

namespace quotcert {

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  require_same_ring(f.ring(), g.ring());
  const MonomialOrder order = MonomialOrder::grevlex();
  Polynomial p = f;
  Polynomial q(f.ring());
  const auto& [glm, glc] = g.leading_term(order);
  while (!p.is_zero()) {
    const auto& [plm, plc] = p.leading_term(order);
    if (!monomial_divides(glm, plm)) return std::nullopt;
    Monomial m = monomial_div(plm, glm);
    Rational c = plc / glc;
    q += Polynomial::term(f.ring(), m, c);
    p -= g.term_multiplied(m, c);
  }
  return q;
}

namespace {

// View of a polynomial as univariate in one variable with polynomial
// coefficients (in the same ring, free of that variable).
std::map<unsigned, Polynomial> as_univariate(const Polynomial& f, std::size_t var) {
  std::map<unsigned, Polynomial> coeffs;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    unsigned e = rest[var];
    rest[var] = 0;
    auto [it, inserted] = coeffs.emplace(e, Polynomial::term(f.ring(), rest, c));
    if (!inserted) it->second += Polynomial::term(f.ring(), rest, c);
  }
  return coeffs;
}

Polynomial univariate_lc(const Polynomial& f, std::size_t var) {
  auto coeffs = as_univariate(f, var);
  return coeffs.rbegin()->second;
}

// Fraction-free pseudo-remainder of f by g in the chosen variable.
Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, std::size_t var) {
  Polynomial r = f;
  unsigned dg = g.degree_in(var);
  Polynomial glc = univariate_lc(g, var);
  Polynomial xv = Polynomial::variable(f.ring(), var);
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    unsigned dr = r.degree_in(var);
    Polynomial rlc = univariate_lc(r, var);
    r = glc * r - rlc * xv.pow(dr - dg) * g;
  }
  return r;
}

Polynomial normalize_monic(const Polynomial& f) {
  return f.is_zero() ? f : f.monic(MonomialOrder::grevlex());
}

Polynomial content_in(const Polynomial& f, std::size_t var);

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return normalize_monic(g);
  if (g.is_zero()) return normalize_monic(f);
  if (f.is_constant() || g.is_constant()) return Polynomial::one(f.ring());

  // Main variable: the largest index occurring in either operand.
  std::size_t var = 0;
  for (std::size_t v = f.ring()->arity(); v-- > 0;) {
    if (f.involves(v) || g.involves(v)) {
      var = v;
      break;
    }
  }
  if (!f.involves(var) || !g.involves(var)) {
    // One operand is free of the main variable: it must divide the other's
    // content with respect to that variable.
    const Polynomial& free_part = f.involves(var) ? g : f;
    const Polynomial& other = f.involves(var) ? f : g;
    return gcd_impl(free_part, content_in(other, var));
  }

  Polynomial cf = content_in(f, var);
  Polynomial cg = content_in(g, var);
  Polynomial c = gcd_impl(cf, cg);

  auto pf = exact_divide(f, cf);
  auto pg = exact_divide(g, cg);
  if (!pf || !pg) throw Error("gcd: content division failed");

  Polynomial a = *pf;
  Polynomial b = *pg;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b, var);
    if (!r.is_zero()) {
      auto cr = content_in(r, var);
      auto pr = exact_divide(r, cr);
      if (!pr) throw Error("gcd: primitive part division failed");
      r = *pr;
    }
    a = b;
    b = r;
  }
  return normalize_monic(c * a);
}

Polynomial content_in(const Polynomial& f, std::size_t var) {
  auto coeffs = as_univariate(f, var);
  Polynomial acc(f.ring());
  for (const auto& [e, coeff] : coeffs) {
    acc = gcd_impl(acc, coeff);
    if (acc.is_one()) break;
  }
  return acc;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  return gcd_impl(f, g);
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return f;
  Polynomial d(f.ring());
  for (std::size_t v = 0; v < f.ring()->arity(); ++v) {
    if (!f.involves(v)) continue;
    d = d.is_zero() ? poly_gcd(f, f.derivative(v)) : poly_gcd(d, f.derivative(v));
    if (d.is_one()) return normalize_monic(f);
  }
  if (d.is_zero() || d.is_constant()) return normalize_monic(f);
  auto q = exact_divide(normalize_monic(f), d);
  if (!q) throw Error("squarefree part: division failed");
  return normalize_monic(*q);
}

std::vector<Rational> rational_roots(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return {};
  std::size_t var = 0;
  std::size_t count = 0;
  for (std::size_t v = 0; v < f.ring()->arity(); ++v) {
    if (f.involves(v)) {
      var = v;
      ++count;
    }
  }
  if (count != 1) throw Error("rational_roots: polynomial is not univariate");

  std::vector<Rational> roots;
  // Coefficients by exponent; integerize by the lcm of denominators.
  std::map<unsigned, Rational> coeffs;
  for (const auto& [m, c] : f.terms()) coeffs[m[var]] = c;

  unsigned low = coeffs.begin()->first;
  if (low > 0) roots.push_back(Rational(0));

  Int den_lcm = 1;
  for (const auto& [e, c] : coeffs) den_lcm = lcm(den_lcm, denominator(c));
  std::map<unsigned, Int> zc;
  for (const auto& [e, c] : coeffs) zc[e - low] = numerator(c) * (den_lcm / denominator(c));

  if (zc.size() == 1) return roots;  // pure monomial

  Int a0 = zc.begin()->second;
  Int ad = zc.rbegin()->second;
  unsigned deg = zc.rbegin()->first;

  auto eval = [&](const Rational& x) {
    Rational acc(0);
    for (const auto& [e, c] : zc) acc += Rational(c) * rational_pow(x, e);
    return acc;
  };

  if (zc.size() == 2) {
    // Binomial: the exact n-th root enumerates every rational root.
    Rational target(-a0, ad);
    if (auto r = exact_nth_root(target, deg)) {
      if (eval(*r) == 0) roots.push_back(*r);
      if (deg % 2 == 0 && eval(-*r) == 0) roots.push_back(-*r);
    }
  } else {
    std::vector<Int> ps = small_divisors(a0);
    std::vector<Int> qs = small_divisors(ad);
    for (const Int& p : ps) {
      for (const Int& q : qs) {
        for (int sign : {1, -1}) {
          Rational cand(sign * p, q);
          if (eval(cand) == 0 &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace quotcert
