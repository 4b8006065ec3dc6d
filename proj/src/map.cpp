#include "quotcert/map.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "quotcert/error.hpp"

namespace quotcert {

PolynomialMap::PolynomialMap(RingPtr source_, RingPtr target_,
                             std::vector<Polynomial> components_, Ideal domain_,
                             std::vector<Polynomial> charts_)
    : source(std::move(source_)),
      target(std::move(target_)),
      components(std::move(components_)),
      domain(std::move(domain_)),
      charts(std::move(charts_)) {
  if (components.size() != target->arity())
    throw ArityError("map components must match the target arity");
  for (const auto& c : components) require_same_ring(source, c.ring());
  require_same_ring(source, domain.ring());
  if (charts.empty()) charts.push_back(Polynomial::one(source));
  for (const auto& h : charts) {
    require_same_ring(source, h.ring());
    if (h.is_zero()) throw Error("zero chart polynomial");
  }
}

namespace {

// Graph of one chart: ring [source..., target...] (target names freshened on
// collision), ideal  domain + (y_j - f_j), chart carried separately.
struct GraphData {
  RingPtr ring;
  Ideal ideal;
  std::optional<Polynomial> chart;
  std::size_t n_source;
};

GraphData make_graph(const PolynomialMap& map, const Polynomial& chart) {
  const std::size_t n = map.source->arity();
  const std::size_t m = map.target->arity();
  std::vector<std::string> names = map.source->variables();
  for (std::size_t j = 0; j < m; ++j) {
    std::string name = map.target->variable(j);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
  }
  RingPtr ring = PolynomialRing::make(std::move(names));

  std::vector<std::size_t> up(n);
  std::iota(up.begin(), up.end(), 0);

  std::vector<Polynomial> gens;
  for (const auto& g : map.domain.generators()) gens.push_back(g.mapped_to(ring, up));
  for (std::size_t j = 0; j < m; ++j)
    gens.push_back(Polynomial::variable(ring, n + j) - map.components[j].mapped_to(ring, up));

  GraphData data{ring, Ideal(ring, std::move(gens)), std::nullopt, n};
  if (!chart.is_constant()) data.chart = chart.mapped_to(ring, up);
  return data;
}

// Extension-theorem projection of one chart's graph. Ring-shape invariant:
// the current ring is [elimination block | target block], targets last.
class Projector {
 public:
  Projector(RingPtr target, std::size_t max_nodes)
      : target_(std::move(target)), max_nodes_(max_nodes) {}

  std::vector<Stratum> strata;
  std::vector<Ideal> unresolved;

  void run(const Ideal& I, std::size_t elim_count, std::vector<Polynomial> charts) {
    project(I, elim_count, std::move(charts), 0);
  }

 private:
  RingPtr target_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::size_t fresh_ = 0;

  static constexpr std::size_t kMaxDepth = 48;

  // Maps everything from ring into a copy with variable x removed.
  struct Down {
    RingPtr ring;
    std::vector<std::size_t> index;  // old -> new (kDropped at x)
  };
  static Down ring_without(const RingPtr& ring, std::size_t x) {
    std::vector<std::string> names;
    std::vector<std::size_t> index(ring->arity(), Polynomial::kDropped);
    for (std::size_t v = 0; v < ring->arity(); ++v) {
      if (v == x) continue;
      index[v] = names.size();
      names.push_back(ring->variable(v));
    }
    return {PolynomialRing::make(std::move(names)), std::move(index)};
  }

  void emit(const Ideal& I, const std::vector<Polynomial>& charts) {
    const RingPtr& ring = I.ring();
    std::vector<std::size_t> idx(ring->arity());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(g.mapped_to(target_, idx));
    Polynomial chart_product = Polynomial::one(target_);
    for (const auto& h : charts) chart_product = chart_product * h.mapped_to(target_, idx);
    strata.emplace_back(Ideal(target_, std::move(gens)), Ideal(target_, {chart_product}));
  }

  void give_up(const Ideal& I) { unresolved.push_back(I); }

  void project(Ideal I, std::size_t k, std::vector<Polynomial> charts, std::size_t depth) {
    static const bool trace = std::getenv("QUOTCERT_TRACE_IMAGE") != nullptr;
    if (trace) {
      std::cerr << "[image] node=" << nodes_ << " depth=" << depth << " k=" << k
                << " gens=" << I.generators().size() << " charts=" << charts.size()
                << " arity=" << I.ring()->arity() << "\n";
    }
    if (++nodes_ > max_nodes_ || depth > kMaxDepth) {
      if (trace) std::cerr << "[image] GIVE UP (budget)\n";
      give_up(I);
      return;
    }
    for (const auto& h : charts)
      if (!h.is_constant()) I = saturation(I, h);
    if (is_trivial(I)) return;
    if (k == 0) {
      emit(I, charts);
      return;
    }

    // Variable choice: cheap score first, full attempt in score order.
    // Reciprocal (chart-coordinate) variables go last: eliminating one too
    // early just re-emits the chart it encodes and loops.
    std::vector<std::pair<long, std::size_t>> order;
    for (std::size_t x = 0; x < k; ++x) {
      long score = 0;
      if (I.ring()->variable(x).rfind("rcp", 0) == 0) score += 8000;
      for (const auto& h : charts)
        if (h.involves(x)) score += 1000;
      unsigned mindeg = 0;
      std::size_t involved = 0;
      bool free_linear = false;
      for (const auto& g : I.generators()) {
        unsigned d = g.degree_in(x);
        if (d == 0) continue;
        ++involved;
        if (mindeg == 0 || d < mindeg) mindeg = d;
        if (d == 1 && leading_coefficient_in(g, x).is_constant()) free_linear = true;
      }
      if (involved == 0)
        score -= 5000;  // variable is free: dropping it is exact
      else
        score += static_cast<long>(mindeg) * 20 + static_cast<long>(involved);
      if (free_linear) score -= 2000;
      order.emplace_back(score, x);
    }
    std::sort(order.begin(), order.end());

    for (const auto& [score, x] : order)
      if (eliminate_one(I, k, charts, x, depth)) return;

    // Descent stalled for every variable: split on a visible factor.
    if (auto branches = split_once(I)) {
      for (const auto& branch : *branches) project(branch, k, charts, depth + 1);
      return;
    }
    give_up(I);
  }

  static Polynomial leading_coefficient_in(const Polynomial& g, std::size_t x) {
    unsigned d = g.degree_in(x);
    Polynomial lc(g.ring());
    for (const auto& [m, c] : g.terms()) {
      if (m[x] != d) continue;
      Monomial rest = m;
      rest[x] = 0;
      lc += Polynomial::term(g.ring(), rest, c);
    }
    return lc;
  }

  bool eliminate_one(const Ideal& I, std::size_t k, const std::vector<Polynomial>& charts,
                     std::size_t x, std::size_t depth) {
    const RingPtr& ring = I.ring();

    // Charts involving x are folded into the ideal first: D(h) is the affine
    // chart with coordinate ring k[x...][z]/(1 - z h).
    std::vector<Polynomial> chart_x, chart_rest;
    for (const auto& h : charts) (h.involves(x) ? chart_x : chart_rest).push_back(h);
    if (!chart_x.empty()) {
      std::vector<std::string> names;
      std::string fresh = ring->fresh_name("rcp" + std::to_string(fresh_++));
      for (std::size_t v = 0; v < ring->arity(); ++v) {
        if (v == k) names.push_back(fresh);
        names.push_back(ring->variable(v));
      }
      if (ring->arity() == k) names.push_back(fresh);  // no target block (unused in practice)
      RingPtr ext = PolynomialRing::make(std::move(names));
      std::vector<std::size_t> up(ring->arity());
      for (std::size_t v = 0; v < ring->arity(); ++v) up[v] = v < k ? v : v + 1;

      Polynomial w = Polynomial::one(ext);
      for (const auto& h : chart_x) w = w * h.mapped_to(ext, up);
      std::vector<Polynomial> gens;
      for (const auto& g : I.generators()) gens.push_back(g.mapped_to(ext, up));
      gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, k) * w);

      std::vector<Polynomial> new_charts;
      for (const auto& h : chart_rest) new_charts.push_back(h.mapped_to(ext, up));

      project(Ideal(ext, std::move(gens)), k + 1, std::move(new_charts), depth + 1);
      return true;
    }

    auto down = ring_without(ring, x);
    auto lower = [&](const Polynomial& f) { return f.mapped_to(down.ring, down.index); };
    auto lower_all = [&](const std::vector<Polynomial>& fs) {
      std::vector<Polynomial> out;
      out.reserve(fs.size());
      for (const auto& f : fs) out.push_back(lower(f));
      return out;
    };

    bool x_used = false;
    for (const auto& g : I.generators())
      if (g.involves(x)) x_used = true;
    if (!x_used) {
      project(Ideal(down.ring, lower_all(I.generators())), k - 1, lower_all(charts), depth);
      return true;
    }

    auto basis = groebner_elimination_basis(I, {x});
    std::vector<Polynomial> x_free, x_elems;
    for (auto& g : basis) (g.involves(x) ? x_elems : x_free).push_back(std::move(g));
    Ideal I1(ring, x_free);
    if (x_elems.empty()) {
      project(Ideal(down.ring, lower_all(I1.generators())), k - 1, lower_all(charts), depth);
      return true;
    }

    // Leading coefficients, reduced against the projected ideal so remaining
    // elimination variables rewrite into target terms where possible.
    const MonomialOrder red_order = MonomialOrder::block_elim(k);
    std::vector<Polynomial> lcs;
    std::set<std::string> seen;
    bool constant_lc = false;
    for (const auto& g : x_elems) {
      Polynomial l = normal_form(leading_coefficient_in(g, x), I1, red_order);
      if (l.is_zero()) continue;
      if (l.is_constant()) {
        constant_lc = true;
        break;
      }
      if (radical_membership(l, I1)) continue;
      if (seen.insert(l.to_string()).second) lcs.push_back(std::move(l));
    }
    if (constant_lc) {
      // Every point of V(I1) lifts: the projection is exact.
      project(Ideal(down.ring, lower_all(I1.generators())), k - 1, lower_all(charts), depth);
      return true;
    }
    if (lcs.empty()) return false;  // extension criterion is vacuous here

    // Residual descent must be strict or we try another variable.
    bool descends = false;
    for (const auto& l : lcs)
      if (!radical_membership(l, I)) descends = true;
    if (!descends) return false;

    // Good parts: V(I1) ∩ D(l) lifts pointwise; project with l as a chart.
    for (const auto& l : lcs) {
      std::vector<Polynomial> next_charts = lower_all(charts);
      next_charts.push_back(lower(l));
      project(Ideal(down.ring, lower_all(I1.generators())), k - 1, std::move(next_charts),
              depth + 1);
    }

    // Residual: the fibers over V(all leading coefficients).
    project(I.with_extra(lcs), k, charts, depth + 1);
    return true;
  }
};

}  // namespace

Ideal image_closure(const PolynomialMap& map) {
  std::optional<Ideal> acc;
  for (const auto& chart : map.charts) {
    GraphData graph = make_graph(map, chart);
    Ideal sat = graph.chart ? saturation(graph.ideal, *graph.chart) : graph.ideal;
    std::vector<std::size_t> keep(map.target->arity());
    std::iota(keep.begin(), keep.end(), graph.n_source);
    Ideal projected = elimination_ideal(sat, keep);
    // Re-express in the caller's target ring.
    std::vector<std::size_t> idx(map.target->arity());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Polynomial> gens;
    for (const auto& g : projected.generators()) gens.push_back(g.mapped_to(map.target, idx));
    Ideal part(map.target, std::move(gens));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return *acc;
}

ImageResult constructible_image(const PolynomialMap& map) {
  ImageResult result(map.target);
  std::vector<Stratum> strata;
  for (const auto& chart : map.charts) {
    GraphData graph = make_graph(map, chart);
    Projector projector(map.target, 4000);
    std::vector<Polynomial> charts;
    if (graph.chart) charts.push_back(*graph.chart);
    projector.run(graph.ideal, graph.n_source, std::move(charts));
    strata.insert(strata.end(), projector.strata.begin(), projector.strata.end());
    result.unresolved.insert(result.unresolved.end(), projector.unresolved.begin(),
                             projector.unresolved.end());
  }
  result.image = ConstructibleSet(map.target, std::move(strata));
  return result;
}

int fiber_dimension(const PolynomialMap& map, const std::vector<Rational>& point) {
  if (point.size() != map.target->arity())
    throw ArityError("fiber point must have target arity");
  std::vector<Polynomial> cut = map.domain.generators();
  for (std::size_t j = 0; j < map.components.size(); ++j)
    cut.push_back(map.components[j] - Polynomial::constant(map.source, point[j]));
  Ideal fiber(map.source, std::move(cut));

  int best = -1;
  for (const auto& h : map.charts) {
    Ideal piece = h.is_constant() ? fiber : saturation(fiber, h);
    if (is_trivial(piece)) continue;
    best = std::max(best, dimension(piece));
  }
  return best;
}

CandidateVerdict verify_image_candidate(const PolynomialMap& map, const ConstructibleSet& S,
                                        std::size_t samples, unsigned seed) {
  if (samples < 1) throw Error("verify_image_candidate: samples must be >= 1");
  CandidateVerdict verdict;
  std::mt19937 rng(seed);

  // (a) S must sit inside the closure of the image.
  Ideal closure = image_closure(map);
  if (!is_subset(S, ConstructibleSet::of_variety(closure))) {
    verdict.pass = false;
    verdict.failures.push_back("candidate is not contained in the image closure");
  }

  // (b) forward sampling: random domain points map into S.
  std::vector<Stratum> domain_strata;
  for (const auto& h : map.charts) domain_strata.emplace_back(map.domain, Ideal(map.source, {h}));
  ConstructibleSet domain_set(map.source, std::move(domain_strata));
  auto domain_sample = sample_points(domain_set, samples, rng);
  verdict.sampling_exhausted |= domain_sample.exhausted;
  for (const auto& p : domain_sample.points) {
    std::vector<Rational> q;
    q.reserve(map.components.size());
    for (const auto& f : map.components) q.push_back(f.evaluated(p));
    ++verdict.domain_points_checked;
    if (!contains_point(S, q)) {
      verdict.pass = false;
      std::ostringstream out;
      out << "image point outside candidate: (";
      for (std::size_t j = 0; j < q.size(); ++j) out << (j ? "," : "") << q[j].str();
      out << ")";
      verdict.failures.push_back(out.str());
      break;
    }
  }

  // (c) backward sampling: points of S have nonempty fibers.
  auto image_sample = sample_points(S, samples, rng);
  verdict.sampling_exhausted |= image_sample.exhausted;
  for (const auto& q : image_sample.points) {
    ++verdict.image_points_checked;
    if (fiber_dimension(map, q) < 0) {
      verdict.pass = false;
      std::ostringstream out;
      out << "candidate point with empty fiber: (";
      for (std::size_t j = 0; j < q.size(); ++j) out << (j ? "," : "") << q[j].str();
      out << ")";
      verdict.failures.push_back(out.str());
      break;
    }
  }
  return verdict;
}

}  // namespace quotcert
