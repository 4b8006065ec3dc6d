#include <algorithm>
#include <set>
#include <sstream>

#include "quotcert/constructible.hpp"
#include "quotcert/error.hpp"

namespace quotcert {

namespace {

// Assignment pool for free variables. Perfect powers are included so that
// binomial equations (v^2 = u^3 and friends) admit rational back-solutions.
Rational pool_value(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> shape(0, 5);
  Rational base(num(rng), den(rng));
  switch (shape(rng)) {
    case 0:
      return base;
    case 1:
      return base * base;
    case 2:
      return base * base * base;
    case 3:
      return rational_pow(base, 6);
    case 4:
      return Rational(num(rng));
    default:
      return base;
  }
}

std::string point_key(const std::vector<Rational>& p) {
  std::ostringstream out;
  for (const auto& q : p) out << q.str() << ",";
  return out.str();
}

// One randomized attempt at a rational point of V(I): substitute, solve any
// univariate generator exactly, otherwise assign a pool value to a free
// variable; detects contradictions early.
std::optional<std::vector<Rational>> attempt(const Ideal& I,
                                             const std::vector<std::size_t>& free_pref,
                                             std::mt19937& rng) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  const auto& gb = I.groebner_basis(MonomialOrder::lex());

  std::vector<std::optional<Rational>> assigned(n);
  std::vector<Polynomial> current(gb.begin(), gb.end());

  auto substitute_assigned = [&](const Polynomial& f) {
    std::vector<Polynomial> bindings;
    bindings.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      bindings.push_back(assigned[v] ? Polynomial::constant(ring, *assigned[v])
                                     : Polynomial::variable(ring, v));
    }
    return f.substituted(bindings);
  };

  std::size_t remaining = n;
  std::size_t guard = 4 * n + 8;
  while (remaining > 0 && guard-- > 0) {
    // Refresh the system under the current partial assignment.
    bool contradiction = false;
    for (auto& f : current) {
      f = substitute_assigned(f);
      if (!f.is_zero() && f.is_constant()) {
        contradiction = true;
        break;
      }
    }
    if (contradiction) return std::nullopt;

    // Solve a univariate generator if one exists.
    bool solved = false;
    for (const auto& f : current) {
      if (f.is_zero() || f.is_constant()) continue;
      std::size_t nvars = 0, var = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (f.involves(v)) {
          ++nvars;
          var = v;
        }
      }
      if (nvars != 1 || assigned[var]) continue;
      auto roots = rational_roots(f);
      if (roots.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      assigned[var] = roots[pick(rng)];
      --remaining;
      solved = true;
      break;
    }
    if (solved) continue;

    // Otherwise assign a free variable (independent-set variables first).
    std::optional<std::size_t> var;
    for (std::size_t v : free_pref) {
      if (!assigned[v]) {
        var = v;
        break;
      }
    }
    if (!var) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!assigned[v]) {
          var = v;
          break;
        }
      }
    }
    if (!var) break;
    assigned[*var] = pool_value(rng);
    --remaining;
  }

  std::vector<Rational> point;
  point.reserve(n);
  for (std::size_t v = 0; v < n; ++v) point.push_back(assigned[v].value_or(Rational(0)));
  for (const auto& g : I.generators())
    if (g.evaluated(point) != 0) return std::nullopt;
  return point;
}

}  // namespace

SampleResult sample_points(const Stratum& s, std::size_t count, std::mt19937& rng) {
  SampleResult result;
  if (is_empty(s)) {
    result.exhausted = true;
    return result;
  }
  std::vector<std::size_t> free_pref = independent_set(s.vanishing);
  std::set<std::string> seen;
  std::size_t budget = 80 * count + 200;
  while (result.points.size() < count && budget-- > 0) {
    auto p = attempt(s.vanishing, free_pref, rng);
    if (!p || !contains_point(s, *p)) continue;
    if (seen.insert(point_key(*p)).second) result.points.push_back(std::move(*p));
  }
  result.exhausted = result.points.size() < count;
  return result;
}

SampleResult sample_points(const ConstructibleSet& S, std::size_t count, std::mt19937& rng) {
  SampleResult result;
  if (S.strata().empty()) {
    result.exhausted = true;
    return result;
  }
  std::set<std::string> seen;
  // Round-robin over strata so every piece contributes points.
  std::size_t rounds = 0;
  while (result.points.size() < count && rounds < 40) {
    bool progress = false;
    for (const auto& s : S.strata()) {
      if (result.points.size() >= count) break;
      auto piece = sample_points(s, 1 + rounds / 4, rng);
      for (auto& p : piece.points) {
        if (seen.insert(point_key(p)).second) {
          result.points.push_back(std::move(p));
          progress = true;
          if (result.points.size() >= count) break;
        }
      }
    }
    if (!progress) ++rounds;
    ++rounds;
  }
  result.exhausted = result.points.size() < count;
  return result;
}

}  // namespace quotcert
