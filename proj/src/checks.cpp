#include "geoprod/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "geoprod/boundary.hpp"
#include "geoprod/convexity.hpp"
#include "geoprod/enumerate.hpp"
#include "geoprod/error.hpp"
#include "geoprod/families.hpp"
#include "geoprod/product.hpp"
#include "geoprod/random_graph.hpp"
#include "geoprod/solvers.hpp"

namespace geoprod {

bool SuiteReport::passed() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second.passed == kv.second.total; });
}

void SuiteReport::merge(const SuiteReport& other) {
  for (const auto& [name, t] : other.counts) {
    auto& mine = counts[other.suite + "." + name];
    mine.passed += t.passed;
    mine.total += t.total;
  }
  for (const auto& f : other.failures)
    if (failures.size() < kMaxFailures) failures.push_back(other.suite + "." + f);
  complete = complete && other.complete;
}

std::vector<Graph> single_graph_pool(std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    auto graphs = connected_graphs(n);
    out.insert(out.end(), graphs.begin(), graphs.end());
  }
  return out;
}

std::vector<std::pair<Graph, Graph>> product_pair_pool(const CheckOptions& opts) {
  std::vector<Graph> factors;
  if (opts.exhaustive_pair_order != 0) {
    factors = single_graph_pool(opts.exhaustive_pair_order);
  } else {
    factors = single_graph_pool(std::min<std::size_t>(opts.max_factor_order, 4));
    for (const auto& spec : family_catalogue(opts.max_factor_order))
      if (spec.order() >= 5) factors.push_back(make_family(spec));
  }
  std::vector<std::pair<Graph, Graph>> out;
  for (const auto& g : factors)
    for (const auto& h : factors) out.emplace_back(g, h);
  return out;
}

namespace {

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ":[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string describe(const Graph& g, const Graph& h) { return describe(g) + " x " + describe(h); }

VertexSet from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(v);
  return s;
}

VertexSet singleton(std::size_t n, Vertex v) { return VertexSet(n, {v}); }

// Independent streams per suite so that adding trials to one suite leaves
// the others unchanged.
Rng suite_rng(const CheckOptions& opts, std::uint64_t salt) { return Rng(opts.seed * 0x9E3779B97F4A7C15ULL + salt); }

std::vector<Graph> random_graphs(Rng& rng, std::size_t count, std::size_t max_order) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_graph(rng, 2, max_order));
  return out;
}

std::vector<std::pair<Graph, Graph>> random_pairs(Rng& rng, std::size_t count, std::size_t max_order) {
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t i = 0; i < count; ++i) {
    Graph g = random_connected_graph(rng, 2, max_order);
    Graph h = random_connected_graph(rng, 2, max_order);
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

SolveOptions solve_options(const CheckOptions& opts, Mode mode) {
  SolveOptions so;
  so.mode = mode;
  so.time_limit_seconds = opts.time_limit_seconds;
  so.parallel_width = opts.workers;
  return so;
}

std::optional<SolveResult> solve_or_flag(SuiteReport& rep, const IntervalTable& t, const CheckOptions& opts,
                                         Mode mode) {
  auto r = solve(t, solve_options(opts, mode));
  if (!r.optimal) {
    rep.complete = false;
    return std::nullopt;
  }
  return r;
}

// ---------------------------------------------------------------- intervals

void interval_invariants(SuiteReport& rep, const IntervalTable& t) {
  const std::size_t n = t.order();
  const DistanceMatrix d = all_pairs_distances(t.graph());
  std::string bad;
  for (Vertex u = 0; u < n && bad.empty(); ++u) {
    for (Vertex v = 0; v < n && bad.empty(); ++v) {
      const VertexSet i = t.interval(u, v);
      if (!i.contains(u) || !i.contains(v)) bad = "endpoints missing";
      if (i != t.interval(v, u)) bad = "not symmetric";
      if (u == v && i.count() != 1) bad = "I[u,u] != {u}";
      for (Vertex w = 0; w < n; ++w)
        if ((d.at(u, w) + d.at(w, v) == d.at(u, v)) != i.contains(w)) bad = "distance-sum mismatch";
      if (!bad.empty()) bad += " at (" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
  }
  rep.record("interval_invariants", bad.empty(), [&] { return bad + " in " + describe(t.graph()); });
}

void lemma_2de3(SuiteReport& rep, const IntervalTable& t) {
  const std::size_t n = t.order();
  bool ok = true;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c) {
        if (a == b || b == c || a == c || !t.in_interval(b, a, c)) continue;
        if (t.in_interval(a, b, c) || t.in_interval(a, c, b)) ok = false;
      }
  rep.record("lemma_2de3", ok, [&] { return describe(t.graph()); });
}

void closure_laws(SuiteReport& rep, const IntervalTable& t, Rng& rng) {
  const std::size_t n = t.order();
  bool ok = true;
  for (int i = 0; i < 8; ++i) {
    const VertexSet s = random_subset(rng, n, 0.4);
    const VertexSet bigger = s | random_subset(rng, n, 0.3);
    const VertexSet cs = closure(t, s);
    ok = ok && s.is_subset_of(cs) && cs.is_subset_of(closure(t, bigger));
  }
  rep.record("closure_monotone_extensive", ok, [&] { return describe(t.graph()); });
}

// CH(S) against the intersection of all convex supersets of S.
void hull_laws(SuiteReport& rep, const IntervalTable& t, Rng& rng) {
  const std::size_t n = t.order();
  if (n > 8) return;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<VertexSet> convex;
  for (std::uint64_t m = 1; m <= all; ++m) {
    VertexSet s = from_mask(n, m);
    if (is_convex(t, s)) convex.push_back(std::move(s));
  }
  std::vector<VertexSet> samples;
  if (n <= 6) {
    for (std::uint64_t m = 1; m <= all; ++m) samples.push_back(from_mask(n, m));
  } else {
    for (int i = 0; i < 24; ++i) samples.push_back(random_subset(rng, n, 0.3));
  }
  bool ok = true;
  for (const auto& s : samples) {
    VertexSet expected = VertexSet::full(n);
    for (const auto& c : convex)
      if (s.is_subset_of(c)) expected &= c;
    const VertexSet hull = convex_hull(t, s).hull();
    ok = ok && hull == expected && hull_of(t, s) == hull && convex_hull(t, hull).hull() == hull;
  }
  rep.record("hull_smallest_convex", ok, [&] { return describe(t.graph()); });
}

void single_interval_checks(SuiteReport& rep, const Graph& g, Rng& rng) {
  const IntervalTable t(g);
  interval_invariants(rep, t);
  lemma_2de3(rep, t);
  closure_laws(rep, t, rng);
  hull_laws(rep, t, rng);
}

// Lemmas projcamino and projmax with G as the dominating coordinate
// (swap = false) or H (swap = true).
void projection_lemmas(SuiteReport& rep, const ProductGraph& p, const IntervalTable& tp, const IntervalTable& tg,
                       const IntervalTable& th, bool swap) {
  const auto& dp = p.graph().distances();
  const auto& dg = (swap ? th : tg).graph().distances();
  const auto& dh = (swap ? tg : th).graph().distances();
  const IntervalTable& ta = swap ? th : tg;
  const std::size_t n = p.graph().order();
  auto split = [&](Vertex v) {
    const auto pv = p.decode(v);
    return swap ? std::pair{pv.right, pv.left} : std::pair{pv.left, pv.right};
  };
  bool camino = true, projmax = true;
  for (Vertex u = 0; u < n; ++u) {
    const auto [g1, h1] = split(u);
    for (Vertex v = 0; v < n; ++v) {
      const auto [g2, h2] = split(v);
      if (dp.at(u, v) != dg.at(g1, g2)) continue;
      const VertexSet i = tp.interval(u, v);
      VertexSet formula(n);
      for (Vertex w = 0; w < n; ++w) {
        const auto [g, h] = split(w);
        if (i.contains(w) && !ta.in_interval(g1, g, g2)) camino = false;
        if (ta.in_interval(g1, g, g2) && dh.at(h1, h) <= dg.at(g1, g) && dh.at(h, h2) <= dg.at(g, g2)) {
          formula.insert(w);
        }
      }
      if (formula != i) projmax = false;
    }
  }
  const std::string side = swap ? " (H side)" : "";
  rep.record("projcamino", camino, [&] { return describe(p.left(), p.right()) + side; });
  rep.record("projmax", projmax, [&] { return describe(p.left(), p.right()) + side; });
}

void lemazo(SuiteReport& rep, const ProductGraph& p, const IntervalTable& tp, const IntervalTable& th) {
  const std::size_t ng = p.left().order(), nh = p.right().order(), n = p.graph().order();
  bool ok1 = true, ok2 = true, ok3 = true;
  auto at = [&](Vertex g, Vertex h) { return p.encode(g, h); };
  for (Vertex g1 = 0; g1 < ng; ++g1) {
    for (Vertex g2 = 0; g2 < ng; ++g2) {
      if (g1 == g2) continue;
      for (Vertex h1 = 0; h1 < nh; ++h1) {
        for (Vertex h2 = 0; h2 < nh; ++h2) {
          if (h1 == h2) continue;
          const VertexSet s(n, {at(g1, h1), at(g1, h2), at(g2, h1)});
          if (closure(tp, s).contains(at(g2, h2))) ok1 = false;
          for (Vertex h3 = 0; h3 < nh; ++h3) {
            if (h3 == h1 || h3 == h2 || th.in_interval(h1, h3, h2)) continue;
            if (tp.in_interval(at(g1, h1), at(g2, h3), at(g1, h2))) ok2 = false;
            if (tp.in_interval(at(g1, h1), at(g1, h3), at(g2, h2))) ok3 = false;
          }
        }
      }
    }
  }
  const auto what = [&] { return describe(p.left(), p.right()); };
  rep.record("lemazo_i", ok1, what);
  rep.record("lemazo_ii", ok2, what);
  rep.record("lemazo_iii", ok3, what);
}

void interval_powers(SuiteReport& rep, const ProductGraph& p, const IntervalTable& tp, const IntervalTable& tg,
                     const IntervalTable& th, Rng& rng) {
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    const VertexSet s1 = random_subset(rng, tg.order(), 0.35);
    const VertexSet s2 = random_subset(rng, th.order(), 0.35);
    const VertexSet s = cartesian(p, s1, s2);
    for (std::size_t r = 1; r <= 3; ++r) {
      const VertexSet lhs = cartesian(p, closure_power(tg, s1, r), closure_power(th, s2, r));
      if (!lhs.is_subset_of(closure_power(tp, s, r))) ok = false;
    }
  }
  rep.record("intervals_power", ok, [&] { return describe(p.left(), p.right()); });
}

void product_interval_checks(SuiteReport& rep, const Graph& g, const Graph& h, Rng& rng) {
  const ProductGraph p = strong_product(g, h);
  bool formula = true;
  try {
    verify_distance_formula(p);
  } catch (const Error&) {
    formula = false;
  }
  rep.record("distance_formula", formula, [&] { return describe(g, h); });
  const IntervalTable tg(g), th(h), tp(p.graph());
  interval_invariants(rep, tp);
  projection_lemmas(rep, p, tp, tg, th, false);
  projection_lemmas(rep, p, tp, tg, th, true);
  lemazo(rep, p, tp, th);
  interval_powers(rep, p, tp, tg, th, rng);
}

// -------------------------------------------------------------- projections

struct FactorSets {
  std::vector<VertexSet> geodetic;
  std::vector<VertexSet> hull;
  std::optional<VertexSet> min_hull;
};

FactorSets factor_sets(SuiteReport& rep, const IntervalTable& t, const CheckOptions& opts) {
  FactorSets fs;
  const auto g = solve_or_flag(rep, t, opts, Mode::Geodetic);
  const auto h = solve_or_flag(rep, t, opts, Mode::Hull);
  if (g) fs.geodetic.push_back(g->witness);
  if (h) {
    fs.hull.push_back(h->witness);
    fs.min_hull = h->witness;
  }
  fs.geodetic.push_back(greedy_upper_bound(t, Mode::Geodetic));
  fs.hull.push_back(greedy_upper_bound(t, Mode::Hull));
  fs.geodetic.push_back(VertexSet::full(t.order()));
  return fs;
}

void rodaja(SuiteReport& rep, const ProductGraph& p, const IntervalTable& tp, const VertexSet& s, bool swap) {
  const std::size_t other = swap ? p.left().order() : p.right().order();
  bool ok = true;
  for (Vertex x = 0; x < other; ++x) {
    const VertexSet sx = singleton(other, x);
    const VertexSet lifted = swap ? cartesian(p, sx, s) : cartesian(p, s, sx);
    ok = ok && is_hull(tp, lifted);
  }
  rep.record("rodaja", ok, [&] { return describe(p.left(), p.right()) + (swap ? " (H side)" : ""); });
}

void projection_checks(SuiteReport& rep, const Graph& g, const Graph& h, const CheckOptions& opts, Rng& rng) {
  const ProductGraph p = strong_product(g, h);
  const IntervalTable tg(g), th(h), tp(p.graph());
  const auto what = [&] { return describe(g, h); };
  const VertexSet ext_g = simplicial_vertices(g), ext_h = simplicial_vertices(h);

  rep.record("ext_product", simplicial_vertices(p.graph()) == cartesian(p, ext_g, ext_h), what);
  rep.record("extreme_geodesic_iff",
             (is_extreme_geodesic(tg) && is_extreme_geodesic(th)) == is_extreme_geodesic(tp), what);

  const FactorSets fg = factor_sets(rep, tg, opts), fh = factor_sets(rep, th, opts);
  bool geo = true, hull = true;
  for (const auto& a : fg.geodetic)
    for (const auto& b : fh.geodetic) geo = geo && is_geodetic(tp, cartesian(p, a, b));
  for (const auto& a : fg.hull)
    for (const auto& b : fh.hull) hull = hull && is_hull(tp, cartesian(p, a, b));
  rep.record("proposition1_geodetic", geo, what);
  rep.record("proposition1_hull", hull, what);

  // Every geodetic set of the product has a geodetic projection. Small
  // products are checked over all subsets, larger ones on inclusion-minimal
  // geodetic sets shrunk from random starting sets.
  const std::size_t n = p.graph().order();
  std::vector<VertexSet> geodetic_sets;
  if (n <= 12) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      VertexSet s = from_mask(n, m);
      if (is_geodetic(tp, s)) geodetic_sets.push_back(std::move(s));
    }
  } else {
    geodetic_sets.push_back(greedy_upper_bound(tp, Mode::Geodetic));
    for (int i = 0; i < 8; ++i) geodetic_sets.push_back(VertexSet::full(n));
    for (std::size_t i = 1; i < geodetic_sets.size(); ++i) {
      auto& s = geodetic_sets[i];
      std::vector<Vertex> order = s.to_vector();
      std::shuffle(order.begin(), order.end(), rng);
      for (Vertex v : order) {
        s.erase(v);
        if (!is_geodetic(tp, s)) s.insert(v);
      }
    }
  }
  bool prop2 = true;
  for (const auto& s : geodetic_sets) {
    prop2 = prop2 && (is_geodetic(tg, project(p, s, Side::Left)) || is_geodetic(th, project(p, s, Side::Right)));
  }
  rep.record("proposition2", prop2, what);

  if (ext_g.empty() && fg.min_hull) rodaja(rep, p, tp, *fg.min_hull, false);
  if (ext_h.empty() && fh.min_hull) rodaja(rep, p, tp, *fh.min_hull, true);
}

// ---------------------------------------------------------------- conditions

bool all_small_subsets_satisfy_B(const IntervalTable& t) {
  const std::size_t n = t.order();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const int k = __builtin_popcountll(m);
    if (k < 2 || k > 4) continue;
    if (!condition_B(t, from_mask(n, m))) return false;
  }
  return true;
}

void condition_basics(SuiteReport& rep, const Graph& g) {
  const IntervalTable t(g);
  const std::size_t n = g.order();
  bool pairs_b = true, small_a = true;
  for (Vertex u = 0; u < n; ++u) {
    small_a = small_a && !condition_A(t, singleton(n, u));
    for (Vertex v = u + 1; v < n; ++v) {
      const VertexSet s(n, {u, v});
      pairs_b = pairs_b && condition_B(t, s);
      small_a = small_a && !condition_A(t, s);
    }
  }
  rep.record("condition_B_pairs", pairs_b, [&] { return describe(g); });
  rep.record("condition_A_small_sets", small_a, [&] { return describe(g); });
}

// S geodetic with (A) => S x {k} geodetic in G x K_n, for every k.
void lemma_S_s(SuiteReport& rep, const Graph& g) {
  const IntervalTable t(g);
  const std::size_t n = g.order();
  std::vector<VertexSet> sets;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    VertexSet s = from_mask(n, m);
    if (condition_A(t, s) && is_geodetic(t, s)) sets.push_back(std::move(s));
  }
  if (sets.empty()) return;
  for (std::size_t kn = 1; kn <= 3; ++kn) {
    const ProductGraph p = strong_product(g, make_family(FamilySpec::complete(kn)));
    const IntervalTable tp(p.graph());
    bool ok = true;
    for (const auto& s : sets)
      for (Vertex k = 0; k < kn; ++k) ok = ok && is_geodetic(tp, cartesian(p, s, singleton(kn, k)));
    rep.record("lemma_S_s", ok, [&] { return describe(g) + " with K" + std::to_string(kn); });
  }
}

void collapse(SuiteReport& rep, const Graph& g, std::size_t kn, const CheckOptions& opts) {
  const auto r = verify_condition_A_collapse(g, kn, solve_options(opts, Mode::Geodetic));
  if (!r.complete) {
    rep.complete = false;
    return;
  }
  rep.record("condition_A_collapse", r.holds && r.lifted_sets_geodetic, [&] {
    return describe(g) + " with K" + std::to_string(kn) + ": g=" + std::to_string(r.g_factor) +
           ", g(product)=" + std::to_string(r.g_product);
  });
}

void ultima(SuiteReport& rep, const Graph& g, const CheckOptions& opts) {
  const IntervalTable t(g);
  if (!all_small_subsets_satisfy_B(t)) return;
  for (std::size_t k = 2; k <= 3; ++k) {
    const ProductGraph p = strong_product(g, make_family(FamilySpec::cycle(2 * k + 1)));
    const IntervalTable tp(p.graph());
    const auto r = solve_or_flag(rep, tp, opts, Mode::Geodetic);
    if (!r) continue;
    rep.record("odd_cycle_product_at_least_5", r->value >= 5, [&] {
      return describe(g) + " x C" + std::to_string(2 * k + 1) + ": g=" + std::to_string(r->value);
    });
  }
}

// ------------------------------------------------------------------- bounds

void bound_checks(SuiteReport& rep, const Graph& g, const Graph& h, const CheckOptions& opts) {
  const auto r = bounds_report(g, h, solve_options(opts, Mode::Geodetic));
  if (!r.complete) {
    rep.complete = false;
    return;
  }
  const auto what = [&] {
    return describe(g, h) + ": g=" + std::to_string(r.g_left) + "," + std::to_string(r.g_right) + "," +
           std::to_string(r.g_product) + " h=" + std::to_string(r.h_left) + "," + std::to_string(r.h_right) + "," +
           std::to_string(r.h_product);
  };
  for (const auto& c : r.checks)
    if (c.applicable) rep.record(c.name, c.holds, what);
  if (is_extreme_geodesic(g) && is_extreme_geodesic(h)) {
    const std::size_t ext = simplicial_vertices(g).count() * simplicial_vertices(h).count();
    rep.record("extreme_corollary",
               r.g_product == ext && r.h_product == ext && r.g_left * r.g_right == ext && r.h_left * r.h_right == ext,
               what);
  }
}

// ----------------------------------------------------------------- boundary

void single_boundary_checks(SuiteReport& rep, const Graph& g) {
  const auto b = boundary_report(g);
  const auto what = [&] { return describe(g); };
  rep.record("containments", b.containments_hold(simplicial_vertices(g)), what);
  rep.record("eccentric_r_zero", eccentric_set_r(g, 0) == b.eccentric, what);
  const IntervalTable t(g);
  rep.record("contour_hull_set", is_hull(t, b.contour), what);
}

void identity_checks(SuiteReport& rep, const Graph& g, const Graph& h, OrientationPolicy policy) {
  const auto r = verify_product_boundary(g, h, policy);
  for (const auto& item : r.items) {
    rep.record(item.name + "_identity", item.holds, [&] {
      return describe(g, h) + ": formula " + item.formula.to_string() + " direct " + item.direct.to_string();
    });
  }
}

void contour_geodetic_product(SuiteReport& rep, const Graph& g, const Graph& h) {
  const IntervalTable tg(g), th(h);
  if (!is_geodetic(tg, contour_set(g)) || !is_geodetic(th, contour_set(h))) return;
  const ProductGraph p = strong_product(g, h);
  const IntervalTable tp(p.graph());
  rep.record("contour_geodetic_product", is_geodetic(tp, contour_set(p.graph())), [&] { return describe(g, h); });
}

std::vector<std::pair<FamilySpec, FamilySpec>> fixed_boundary_pairs() {
  using F = FamilySpec;
  return {
      {F::path(2), F::path(3)},     {F::path(3), F::path(3)},     {F::path(3), F::path(4)},
      {F::path(3), F::path(5)},     {F::path(3), F::cycle(5)},    {F::complete(2), F::cycle(4)},
      {F::complete(2), F::cycle(5)}, {F::path(2), F::cycle(6)},   {F::complete(3), F::cycle(5)},
      {F::complete(3), F::path(4)}, {F::path(4), F::cycle(7)},    {F::cycle(4), F::cycle(6)},
      {F::cycle(5), F::cycle(7)},   {F::cycle(4), F::cycle(4)},   {F::cycle(5), F::cycle(5)},
      {F::complete(4), F::wheel(6)}, {F::star(4), F::path(5)},    {F::complete_bipartite(2, 3), F::cycle(6)},
      {fixed_tree_a(), F::path(4)}, {F::complete(3), fixed_tree_b()},
  };
}

}  // namespace

SuiteReport check_intervals(const CheckOptions& opts) {
  SuiteReport rep{"intervals", {}, {}, true};
  Rng rng = suite_rng(opts, 1);
  for (const auto& g : single_graph_pool(opts.max_factor_order)) single_interval_checks(rep, g, rng);
  for (const auto& [g, h] : product_pair_pool(opts)) product_interval_checks(rep, g, h, rng);
  for (const auto& [g, h] : random_pairs(rng, opts.trials, opts.max_random_order)) {
    single_interval_checks(rep, g, rng);
    single_interval_checks(rep, h, rng);
    product_interval_checks(rep, g, h, rng);
  }
  return rep;
}

SuiteReport check_projections(const CheckOptions& opts) {
  SuiteReport rep{"projections", {}, {}, true};
  Rng rng = suite_rng(opts, 2);
  for (const auto& [g, h] : product_pair_pool(opts)) projection_checks(rep, g, h, opts, rng);
  for (const auto& [g, h] : random_pairs(rng, opts.trials, std::min<std::size_t>(opts.max_random_order, 6))) {
    projection_checks(rep, g, h, opts, rng);
  }
  return rep;
}

SuiteReport check_conditions(const CheckOptions& opts) {
  SuiteReport rep{"conditions", {}, {}, true};
  Rng rng = suite_rng(opts, 3);

  // Every 2..4 subset of an odd cycle satisfies (B).
  for (std::size_t h = 2; h <= 5; ++h) {
    const std::size_t n = 2 * h + 1;
    const IntervalTable t(make_family(FamilySpec::cycle(n)));
    rep.record("odd_cycle_condition_B", all_small_subsets_satisfy_B(t), "C" + std::to_string(n));
  }
  // (B) for every 2..4 subset of paths and complete graphs.
  for (std::size_t m = 2; m <= 7; ++m) {
    rep.record("path_condition_B", all_small_subsets_satisfy_B(IntervalTable(make_family(FamilySpec::path(m)))),
               "P" + std::to_string(m));
    rep.record("complete_condition_B",
               all_small_subsets_satisfy_B(IntervalTable(make_family(FamilySpec::complete(m)))),
               "K" + std::to_string(m));
  }
  // Geodetic (A)-sets of cycles and bicliques.
  for (std::size_t n = 4; n <= 12; ++n) {
    const IntervalTable t(make_family(FamilySpec::cycle(n)));
    const std::size_t k = n / 2;
    const VertexSet s = n % 2 == 0 ? VertexSet(n, {0, 1, static_cast<Vertex>(k), static_cast<Vertex>(k + 1)})
                                   : VertexSet(n, {0, 1, static_cast<Vertex>(k), static_cast<Vertex>(k + 1),
                                                   static_cast<Vertex>(k + 2)});
    rep.record("cycle_A_set", condition_A(t, s) && is_geodetic(t, s), "C" + std::to_string(n) + " " + s.to_string());
  }
  for (std::size_t r = 2; r <= 5; ++r) {
    for (std::size_t s = r; s <= 5; ++s) {
      const IntervalTable t(make_family(FamilySpec::complete_bipartite(r, s)));
      const auto rv = static_cast<Vertex>(r);
      const VertexSet a(r + s, {0, 1, rv, rv + 1});
      rep.record("biclique_A_set", condition_A(t, a) && is_geodetic(t, a),
                 "K" + std::to_string(r) + "," + std::to_string(s));
    }
  }

  const auto pool = single_graph_pool(opts.max_factor_order);
  for (const auto& g : pool) {
    condition_basics(rep, g);
    lemma_S_s(rep, g);
  }
  for (const auto& g : single_graph_pool(std::min<std::size_t>(opts.max_factor_order, 5))) {
    collapse(rep, g, 2, opts);
    ultima(rep, g, opts);
  }
  using F = FamilySpec;
  for (const auto& spec : {F::cycle(6), F::cycle(8), F::cycle(9), F::complete_bipartite(2, 3),
                           F::complete_bipartite(3, 3), F::complete_bipartite(4, 4), F::path(6), F::wheel(6)}) {
    for (std::size_t kn = 2; kn <= 4; ++kn) collapse(rep, make_family(spec), kn, opts);
  }
  for (const auto& spec : {F::complete(2), F::complete(3), F::complete(4), F::path(3), F::path(4), F::path(5),
                           F::cycle(5), F::cycle(7)}) {
    ultima(rep, make_family(spec), opts);
  }
  for (const auto& g : random_graphs(rng, opts.trials, opts.max_random_order)) {
    condition_basics(rep, g);
    if (g.order() <= 6) {
      lemma_S_s(rep, g);
      collapse(rep, g, 2, opts);
      ultima(rep, g, opts);
    }
  }
  return rep;
}

SuiteReport check_bounds(const CheckOptions& opts) {
  SuiteReport rep{"bounds", {}, {}, true};
  Rng rng = suite_rng(opts, 4);
  using F = FamilySpec;
  const std::vector<std::pair<F, F>> fixed{{F::complete(3), F::complete(4)},
                                           {F::complete_bipartite(4, 4), F::complete(4)},
                                           {F::cycle(5), F::cycle(7)}};
  for (const auto& [a, b] : fixed) bound_checks(rep, make_family(a), make_family(b), opts);
  const std::vector<F> factors{F::path(3),  F::path(4),     F::cycle(4),     F::cycle(5),
                               F::cycle(7), F::complete(3), F::complete(4), F::complete_bipartite(2, 3)};
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j)
      bound_checks(rep, make_family(factors[i]), make_family(factors[j]), opts);
  for (const auto& [g, h] : random_pairs(rng, opts.trials, std::min<std::size_t>(opts.max_random_order, 6))) {
    bound_checks(rep, g, h, opts);
  }
  return rep;
}

SuiteReport check_boundary(const CheckOptions& opts) {
  SuiteReport rep{"boundary", {}, {}, true};
  Rng rng = suite_rng(opts, 5);
  for (const auto& [a, b] : fixed_boundary_pairs()) {
    const Graph g = make_family(a), h = make_family(b);
    const auto r = verify_product_boundary(g, h, OrientationPolicy::PerItem);
    rep.record("fixed_pair_orientable", r.orientable, a.name() + " x " + b.name());
    if (r.orientable) identity_checks(rep, g, h, OrientationPolicy::Strict);
    single_boundary_checks(rep, strong_product(g, h).graph());
  }
  for (const auto& g : single_graph_pool(opts.max_factor_order)) single_boundary_checks(rep, g);
  for (const auto& [g, h] : product_pair_pool(opts)) {
    identity_checks(rep, g, h, OrientationPolicy::PerItem);
    single_boundary_checks(rep, strong_product(g, h).graph());
    contour_geodetic_product(rep, g, h);
  }
  for (const auto& [g, h] : random_pairs(rng, opts.trials, opts.max_random_order)) {
    single_boundary_checks(rep, g);
    single_boundary_checks(rep, h);
    identity_checks(rep, g, h, OrientationPolicy::PerItem);
    single_boundary_checks(rep, strong_product(g, h).graph());
    contour_geodetic_product(rep, g, h);
  }
  return rep;
}

SuiteReport run_suite(std::string_view name, const CheckOptions& opts) {
  if (name == "intervals") return check_intervals(opts);
  if (name == "projections") return check_projections(opts);
  if (name == "bounds") return check_bounds(opts);
  if (name == "conditions") return check_conditions(opts);
  if (name == "boundary") return check_boundary(opts);
  if (name == "all") {
    SuiteReport all{"all", {}, {}, true};
    for (const auto suite : suite_names()) all.merge(run_suite(suite, opts));
    return all;
  }
  throw Error(ErrorCode::BadParams, "unknown suite '" + std::string(name) +
                                        "' (expected intervals, projections, bounds, conditions, boundary or all)");
}

ResultRecord to_record(const SuiteReport& report) {
  ResultRecord rec;
  rec.instance = report.suite;
  rec.counts = report.counts;
  rec.failures = report.failures;
  if (!report.complete) rec.metrics["incomplete"] = 1;
  return rec;
}

}  // namespace geoprod
