#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "quotcert/error.hpp"
#include "quotcert/ideal.hpp"

namespace quotcert {

namespace {

std::string ideal_key(const Ideal& I) {
  std::vector<std::string> parts;
  for (const auto& g : I.groebner_basis(MonomialOrder::grevlex())) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  for (const auto& p : parts) out << p << ";";
  return out.str();
}

struct SplitAttempt {
  // Either a variety-preserving replacement of one generator, or a list of
  // factors to branch on (V(g) = union of the factor hypersurfaces).
  std::optional<Polynomial> replacement;
  std::vector<Polynomial> factors;
};

std::optional<SplitAttempt> try_split_generator(const Polynomial& g) {
  const RingPtr& ring = g.ring();
  if (g.is_zero() || g.is_constant()) return std::nullopt;

  // Monomial content: g = x^a * h with a != 0.
  Monomial content(ring->arity(), 0);
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    if (first) {
      content = m;
      first = false;
    } else {
      content = monomial_gcd(content, m);
    }
  }
  if (total_degree(content) > 0) {
    SplitAttempt split;
    for (std::size_t v = 0; v < content.size(); ++v)
      if (content[v] > 0) split.factors.push_back(Polynomial::variable(ring, v));
    auto h = exact_divide(g, Polynomial::term(ring, content, 1));
    if (h && !h->is_constant()) split.factors.push_back(*h);
    if (split.factors.size() >= 2) return split;
    split.replacement = split.factors.front();  // e.g. x^2 -> x
    split.factors.clear();
    if (*split.replacement != g.monic(MonomialOrder::grevlex())) return split;
    return std::nullopt;
  }

  // Squarefree reduction keeps the variety and may expose factors later.
  Polynomial sf = squarefree_part(g);
  if (sf != g.monic(MonomialOrder::grevlex())) {
    SplitAttempt split;
    split.replacement = sf;
    return split;
  }

  // Univariate: peel off one rational root.
  std::size_t nvars = 0, var = 0;
  for (std::size_t v = 0; v < ring->arity(); ++v) {
    if (g.involves(v)) {
      ++nvars;
      var = v;
    }
  }
  if (nvars == 1) {
    auto roots = rational_roots(g);
    if (!roots.empty()) {
      Polynomial linear =
          Polynomial::variable(ring, var) - Polynomial::constant(ring, roots.front());
      auto cofactor = exact_divide(g, linear);
      if (cofactor && !cofactor->is_constant()) {
        SplitAttempt split;
        split.factors = {linear, *cofactor};
        return split;
      }
    }
    return std::nullopt;
  }

  // Content with respect to the main variable (largest index present).
  {
    Polynomial xv = Polynomial::variable(ring, var);
    (void)xv;
    Polynomial cont(ring);
    // content of g as univariate in `var`
    // (poly_gcd folds over the coefficients)
    {
      Polynomial acc(ring);
      for (const auto& [m, c] : g.terms()) {
        Monomial rest = m;
        rest[var] = 0;
        Polynomial coeff = Polynomial::term(ring, rest, c);
        acc = acc.is_zero() ? coeff : poly_gcd(acc, coeff);
        if (acc.is_one()) break;
      }
      cont = acc;
    }
    if (!cont.is_zero() && !cont.is_constant()) {
      auto h = exact_divide(g, cont);
      if (h && !h->is_constant()) {
        SplitAttempt split;
        split.factors = {cont, *h};
        return split;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Ideal>> split_once(const Ideal& I) {
  const auto& basis = I.groebner_basis(MonomialOrder::grevlex());
  for (std::size_t gi = 0; gi < basis.size(); ++gi) {
    auto attempt = try_split_generator(basis[gi]);
    if (!attempt || attempt->factors.size() < 2) continue;
    std::vector<Ideal> branches;
    for (const auto& factor : attempt->factors) {
      std::vector<Polynomial> gens = basis;
      gens[gi] = factor;
      branches.emplace_back(I.ring(), std::move(gens));
    }
    return branches;
  }
  return std::nullopt;
}

std::vector<ComponentInfo> minimal_components_info(const Ideal& I) {
  std::vector<ComponentInfo> out;
  if (is_trivial(I)) return out;

  std::deque<Ideal> work;
  work.push_back(I);
  std::set<std::string> seen;
  std::vector<Ideal> atoms;

  std::size_t processed = 0;
  while (!work.empty()) {
    if (++processed > 512)
      throw DecompositionIncompleteError("component splitting exceeded the branch budget");
    Ideal K = work.front();
    work.pop_front();

    const auto& basis = K.groebner_basis(MonomialOrder::grevlex());
    if (!basis.empty() && basis.front().is_constant()) continue;
    Ideal reduced(K.ring(), basis);
    if (!seen.insert(ideal_key(reduced)).second) continue;

    bool split_found = false;
    for (std::size_t gi = 0; gi < basis.size() && !split_found; ++gi) {
      auto attempt = try_split_generator(basis[gi]);
      if (!attempt) continue;
      split_found = true;
      if (attempt->replacement) {
        std::vector<Polynomial> gens = basis;
        gens[gi] = *attempt->replacement;
        work.push_back(Ideal(K.ring(), std::move(gens)));
      } else {
        for (const auto& factor : attempt->factors) {
          std::vector<Polynomial> gens = basis;
          gens[gi] = factor;
          work.push_back(Ideal(K.ring(), std::move(gens)));
        }
      }
    }
    if (split_found) continue;

    // Cross-generator gcd: a common factor splits the variety into the
    // hypersurface part and the residual.
    if (basis.size() > 1) {
      Polynomial g0(K.ring());
      for (const auto& g : basis) {
        g0 = g0.is_zero() ? g : poly_gcd(g0, g);
        if (g0.is_one()) break;
      }
      if (!g0.is_zero() && !g0.is_constant()) {
        work.push_back(Ideal(K.ring(), {g0}));
        std::vector<Polynomial> cofactors;
        for (const auto& g : basis) {
          auto q = exact_divide(g, g0);
          if (!q) throw Error("component split: gcd does not divide a generator");
          cofactors.push_back(std::move(*q));
        }
        work.push_back(Ideal(K.ring(), std::move(cofactors)));
        continue;
      }
    }

    atoms.push_back(reduced);
  }

  // Minimality: keep only maximal varieties; merge duplicates.
  std::vector<bool> dropped(atoms.size(), false);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (i == j || dropped[j] || dropped[i]) continue;
      bool i_in_j = variety_subset(atoms[i], atoms[j]);
      bool j_in_i = variety_subset(atoms[j], atoms[i]);
      if (i_in_j && j_in_i) {
        dropped[std::max(i, j)] = true;
      } else if (i_in_j) {
        dropped[i] = true;
      } else if (j_in_i) {
        dropped[j] = true;
      }
    }
  }

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (dropped[i]) continue;
    ComponentInfo info;
    info.ideal = atoms[i];
    info.dim = dimension(atoms[i]);
    bool linear = true;
    for (const auto& g : atoms[i].generators())
      if (g.degree() > 1) linear = false;
    info.certified_irreducible = linear;
    out.push_back(std::move(info));
  }

  std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return ideal_key(a.ideal) < ideal_key(b.ideal);
  });
  return out;
}

std::vector<Ideal> minimal_components(const Ideal& I) {
  std::vector<Ideal> out;
  for (auto& info : minimal_components_info(I)) out.push_back(std::move(info.ideal));
  return out;
}

}  // namespace quotcert
