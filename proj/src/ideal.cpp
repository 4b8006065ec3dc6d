#include "quotcert/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "quotcert/error.hpp"

namespace quotcert {

namespace {

std::atomic<std::uint64_t> g_step_cap{1000000};
std::atomic<std::uint64_t> g_groebner_runs{0};
std::atomic<std::uint64_t> g_max_basis{0};

void note_basis_size(std::uint64_t n) {
  std::uint64_t cur = g_max_basis.load();
  while (n > cur && !g_max_basis.compare_exchange_weak(cur, n)) {
  }
}

}  // namespace

std::uint64_t groebner_step_cap() { return g_step_cap.load(); }
void set_groebner_step_cap(std::uint64_t cap) { g_step_cap.store(cap ? cap : 1); }

EngineStats engine_stats() { return {g_groebner_runs.load(), g_max_basis.load()}; }
void reset_engine_stats() {
  g_groebner_runs.store(0);
  g_max_basis.store(0);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::one(ring);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::with_extra(const std::vector<Polynomial>& more) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

// ---------------------------------------------------------------------------
// Division / normal form
// ---------------------------------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (f.is_zero() || basis.empty()) return f;
  std::vector<const Monomial*> lms;
  lms.reserve(basis.size());
  for (const auto& g : basis) lms.push_back(&g.leading_monomial(order));

  Polynomial p = f;
  Polynomial remainder(f.ring());
  std::uint64_t steps = 0;
  const std::uint64_t cap = groebner_step_cap();
  while (!p.is_zero()) {
    const auto& [lm, lc] = p.leading_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!monomial_divides(*lms[i], lm)) continue;
      const Rational& glc = basis[i].leading_term(order).second;
      p -= basis[i].term_multiplied(monomial_div(lm, *lms[i]), lc / glc);
      reduced = true;
      if (++steps > cap)
        throw ResourceLimitError("normal form exceeded the reduction step cap");
      break;
    }
    if (!reduced) {
      remainder += Polynomial::term(p.ring(), lm, lc);
      p -= Polynomial::term(p.ring(), lm, lc);
    }
  }
  return remainder;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const MonomialOrder& order) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, I.groebner_basis(order), order);
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
  return normal_form(f, I, MonomialOrder::grevlex()).is_zero();
}

// ---------------------------------------------------------------------------
// Buchberger with coprime + chain criteria and sugar selection
// ---------------------------------------------------------------------------

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& input,
                                   const MonomialOrder& order) {
  g_groebner_runs.fetch_add(1);

  std::vector<Polynomial> basis;
  std::vector<unsigned> sugar;
  for (const auto& g : input) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic(order));
    sugar.push_back(g.degree());
  }
  if (basis.empty()) return {};

  auto lm = [&](std::size_t i) -> const Monomial& { return basis[i].leading_monomial(order); };

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = monomial_lcm(lm(i), lm(j));
      unsigned s = std::max(sugar[i] + total_degree(monomial_div(l, lm(i))),
                            sugar[j] + total_degree(monomial_div(l, lm(j))));
      pending.push_back({i, j, std::move(l), s});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  // Deterministic selection: minimal sugar, then smallest lcm, then the
  // lexicographically smallest leading-monomial pair under the order.
  auto select = [&]() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      c = order.compare(lm(a.i), lm(b.i));
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (order.compare(lm(a.j), lm(b.j)) < 0) best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  };

  std::uint64_t steps = 0;
  const std::uint64_t cap = groebner_step_cap();

  while (!pending.empty()) {
    Pair pr = select();
    done.insert({pr.i, pr.j});

    if (monomial_coprime(lm(pr.i), lm(pr.j))) continue;

    // Chain criterion: some k with lm(k) | lcm(i,j) and both flank pairs done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!monomial_divides(lm(k), pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (done.count({key_ik.first, key_ik.second}) && done.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    const auto& [lmi, lci] = basis[pr.i].leading_term(order);
    const auto& [lmj, lcj] = basis[pr.j].leading_term(order);
    Polynomial s = basis[pr.i].term_multiplied(monomial_div(pr.lcm, lmi), Rational(1) / lci) -
                   basis[pr.j].term_multiplied(monomial_div(pr.lcm, lmj), Rational(1) / lcj);
    Polynomial r = normal_form(s, basis, order);
    if (++steps > cap) throw ResourceLimitError("Groebner computation exceeded the step cap");
    if (r.is_zero()) continue;

    basis.push_back(r.monic(order));
    sugar.push_back(std::max(pr.sugar, r.degree()));
    note_basis_size(basis.size());
    push_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!monomial_divides(lm(j), lm(i))) continue;
      // Tie (equal lm): keep the later element, which already absorbed
      // reductions; deterministic either way.
      redundant = lm(j) != lm(i) || j > i;
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<Polynomial> minimal;
  minimal.reserve(keep.size());
  for (std::size_t i : keep) minimal.push_back(basis[i]);

  // Tail-reduce each element against the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
    if (!r.is_zero()) reduced.push_back(r.monic(order));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  (void)ring;
  return reduced;
}

}  // namespace

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  if (!cache_) throw Error("uninitialized ideal");
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed =
      std::make_shared<const std::vector<Polynomial>>(buchberger(ring_, gens_, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(computed));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Elimination and friends
// ---------------------------------------------------------------------------

std::vector<Polynomial> groebner_elimination_basis(const Ideal& I,
                                                   const std::vector<std::size_t>& eliminate) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();

  std::vector<bool> is_elim(n, false);
  for (std::size_t v : eliminate) is_elim.at(v) = true;

  std::vector<std::size_t> perm;  // new position -> old index
  for (std::size_t v = 0; v < n; ++v)
    if (is_elim[v]) perm.push_back(v);
  for (std::size_t v = 0; v < n; ++v)
    if (!is_elim[v]) perm.push_back(v);

  std::vector<std::size_t> old_to_new(n);
  for (std::size_t p = 0; p < n; ++p) old_to_new[perm[p]] = p;

  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t p = 0; p < n; ++p) names.push_back(ring->variable(perm[p]));
  RingPtr permuted = PolynomialRing::make(std::move(names));

  std::vector<Polynomial> mapped;
  mapped.reserve(I.generators().size());
  for (const auto& g : I.generators()) mapped.push_back(g.mapped_to(permuted, old_to_new));

  Ideal J(permuted, std::move(mapped));
  const auto& gb = J.groebner_basis(MonomialOrder::block_elim(eliminate.size()));

  std::vector<Polynomial> result;
  result.reserve(gb.size());
  for (const auto& g : gb) result.push_back(g.mapped_to(ring, perm));
  return result;
}

namespace {

// Elimination-free elements of the block basis, back in the original ring.
std::vector<Polynomial> eliminated_basis(const Ideal& I, const std::vector<std::size_t>& eliminate) {
  std::vector<Polynomial> result;
  for (auto& g : groebner_elimination_basis(I, eliminate)) {
    bool free_of_block = true;
    for (std::size_t v : eliminate)
      if (g.involves(v)) free_of_block = false;
    if (free_of_block) result.push_back(std::move(g));
  }
  return result;
}

}  // namespace

Ideal elimination_in_ring(const Ideal& I, const std::vector<std::size_t>& eliminate) {
  if (eliminate.empty()) return I;
  return Ideal(I.ring(), eliminated_basis(I, eliminate));
}

Ideal elimination_ideal(const Ideal& I, const std::vector<std::size_t>& keep) {
  const std::size_t n = I.ring()->arity();
  std::vector<bool> keep_flag(n, false);
  for (std::size_t v : keep) keep_flag.at(v) = true;
  std::vector<std::size_t> eliminate;
  for (std::size_t v = 0; v < n; ++v)
    if (!keep_flag[v]) eliminate.push_back(v);

  std::vector<std::size_t> kept_sorted;
  for (std::size_t v = 0; v < n; ++v)
    if (keep_flag[v]) kept_sorted.push_back(v);
  RingPtr sub = I.ring()->restricted(kept_sorted);

  if (eliminate.empty()) {
    std::vector<Polynomial> gens;
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    for (const auto& g : I.generators()) gens.push_back(g.mapped_to(sub, identity));
    return Ideal(sub, std::move(gens));
  }

  std::vector<std::size_t> old_to_sub(n, Polynomial::kDropped);
  for (std::size_t i = 0; i < kept_sorted.size(); ++i) old_to_sub[kept_sorted[i]] = i;

  std::vector<Polynomial> gens;
  for (const auto& g : eliminated_basis(I, eliminate)) gens.push_back(g.mapped_to(sub, old_to_sub));
  return Ideal(sub, std::move(gens));
}

Ideal saturation(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw Error("saturation by the zero polynomial");
  if (f.is_constant()) return I;

  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  RingPtr ext = ring->extended({ring->fresh_name("t")});

  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.mapped_to(ext, up));
  gens.push_back(Polynomial::one(ext) -
                 Polynomial::variable(ext, n) * f.mapped_to(ext, up));

  Ideal J(ext, std::move(gens));
  std::vector<Polynomial> result;
  std::vector<std::size_t> down(n + 1, Polynomial::kDropped);
  for (std::size_t v = 0; v < n; ++v) down[v] = v;
  for (const auto& g : eliminated_basis(J, {n})) result.push_back(g.mapped_to(ring, down));
  return Ideal(ring, std::move(result));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  RingPtr ext = ring->extended({ring->fresh_name("t")});

  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);
  Polynomial t = Polynomial::variable(ext, n);
  Polynomial one_minus_t = Polynomial::one(ext) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.mapped_to(ext, up));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.mapped_to(ext, up));

  Ideal K(ext, std::move(gens));
  std::vector<std::size_t> down(n + 1, Polynomial::kDropped);
  for (std::size_t v = 0; v < n; ++v) down[v] = v;
  std::vector<Polynomial> result;
  for (const auto& g : eliminated_basis(K, {n})) result.push_back(g.mapped_to(ring, down));
  return Ideal(ring, std::move(result));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.generators().empty()) return Ideal::unit(I.ring());

  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal common = ideal_intersection(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> divided;
    for (const auto& h : common.generators()) {
      auto q = exact_divide(h, g);
      if (!q) throw Error("ideal quotient: generator of I ∩ (g) not divisible by g");
      divided.push_back(std::move(*q));
    }
    Ideal colon(I.ring(), std::move(divided));
    acc = acc ? ideal_intersection(*acc, colon) : colon;
  }
  return *acc;
}

bool is_trivial(const Ideal& I) {
  const auto& gb = I.groebner_basis(MonomialOrder::grevlex());
  return gb.size() == 1 && gb.front().is_constant();
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  if (f.is_constant()) return is_trivial(I);

  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  RingPtr ext = ring->extended({ring->fresh_name("t")});
  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);

  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.mapped_to(ext, up));
  gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, n) * f.mapped_to(ext, up));
  return is_trivial(Ideal(ext, std::move(gens)));
}

bool variety_subset(const Ideal& A, const Ideal& B) {
  for (const auto& g : B.generators())
    if (!radical_membership(g, A)) return false;
  return true;
}

bool varieties_equal(const Ideal& A, const Ideal& B) {
  return variety_subset(A, B) && variety_subset(B, A);
}

// ---------------------------------------------------------------------------
// Dimension via independent variable sets modulo the leading-term ideal
// ---------------------------------------------------------------------------

std::vector<std::size_t> independent_set(const Ideal& I) {
  const std::size_t n = I.ring()->arity();
  if (n > 24) throw ResourceLimitError("dimension: too many variables for subset search");

  const auto& gb = I.groebner_basis(MonomialOrder::grevlex());
  if (!gb.empty() && gb.front().is_constant()) return {};

  std::vector<std::uint32_t> supports;
  supports.reserve(gb.size());
  for (const auto& g : gb) {
    const Monomial& m = g.leading_monomial(MonomialOrder::grevlex());
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) mask |= (1u << v);
    supports.push_back(mask);
  }

  // S independent  <=>  no leading monomial supported entirely inside S.
  auto independent = [&](std::uint32_t s) {
    for (std::uint32_t m : supports)
      if ((m & ~s) == 0) return false;
    return true;
  };

  for (std::size_t size = n + 1; size-- > 0;) {
    // All subsets of the given cardinality, lexicographic.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t mask = 0;
      for (std::size_t v : pick) mask |= (1u << v);
      if (independent(mask)) return pick;
      if (size == 0) break;
      std::size_t k = size;
      bool advanced = false;
      while (k-- > 0) {
        if (pick[k] + (size - k) < n) {
          ++pick[k];
          for (std::size_t j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return {};  // only reachable for the trivial ideal
}

int dimension(const Ideal& I) {
  const auto& gb = I.groebner_basis(MonomialOrder::grevlex());
  if (!gb.empty() && gb.front().is_constant()) return -1;
  return static_cast<int>(independent_set(I).size());
}

}  // namespace quotcert
