#include "geoprod/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "geoprod/error.hpp"
#include "geoprod/families.hpp"
#include "geoprod/product.hpp"

namespace geoprod {

std::string_view to_string(Mode mode) { return mode == Mode::Geodetic ? "geodetic" : "hull"; }

namespace {

using Word = VertexSet::Word;
using Clock = std::chrono::steady_clock;

VertexSet grow(const IntervalTable& t, Mode mode, const VertexSet& s) {
  return mode == Mode::Geodetic ? closure(t, s) : hull_of(t, s);
}

bool verifies(const IntervalTable& t, Mode mode, const VertexSet& s) {
  return !s.empty() && grow(t, mode, s).is_full();
}

// Shared, read-only description of one cardinality level of the search.
class LevelSearch {
 public:
  // `order` lists the free vertices in the order they are tried.
  LevelSearch(const IntervalTable& t, Mode mode, const VertexSet& forced, std::vector<Vertex> order)
      : t_(t), mode_(mode), n_(t.order()), words_(t.words_per_set()), forced_(forced.to_vector()),
        candidates_(std::move(order)) {
    full_.assign(words_, ~Word{0});
    if (const std::size_t tail = n_ % VertexSet::kWordBits; tail != 0) full_.back() = (Word{1} << tail) - 1;
    if (mode_ == Mode::Geodetic) build_reach_tables();
    forced_cover_.assign(words_, 0);
    for (std::size_t i = 0; i < forced_.size(); ++i)
      for (std::size_t j = i; j < forced_.size(); ++j) or_into(forced_cover_.data(), forced_[i], forced_[j]);
  }

  std::size_t candidate_count() const { return candidates_.size(); }
  std::size_t forced_count() const { return forced_.size(); }

  struct Shared {
    Clock::time_point deadline;
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> nodes{0};
    // Lowest first-branch index that found a witness; larger branches abort.
    std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
  };

  // Searches the subtree whose first free pick is candidates_[branch] (or,
  // when picks == 0, the forced set alone). Returns the witness if found.
  std::optional<std::vector<Vertex>> run_branch(std::size_t branch, std::size_t picks, Shared& shared) const {
    Worker w(*this, picks, shared, branch);
    w.chosen = forced_;
    std::copy(forced_cover_.begin(), forced_cover_.end(), w.cover(0));
    bool found = false;
    if (picks == 0) {
      found = w.leaf_ok();
    } else {
      w.push(candidates_[branch], 0);
      found = picks == 1 ? w.leaf_ok() : w.dfs(branch + 1, picks - 1, 1);
    }
    shared.nodes += w.nodes;
    if (!found) return std::nullopt;
    return w.chosen;
  }

 private:
  void or_into(Word* acc, Vertex u, Vertex v) const {
    const auto src = t_.interval_words(u, v);
    for (std::size_t i = 0; i < words_; ++i) acc[i] |= src[i];
  }

  bool is_full(const Word* s) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (s[i] != full_[i]) return false;
    return true;
  }

  // reach_[(v * (C + 1) + pos)] = union of I[v, c] over candidates c at index >= pos;
  // pair_reach_[pos] = union of I[c, c'] over candidate pairs at index >= pos.
  void build_reach_tables() {
    const std::size_t c = candidates_.size();
    reach_.assign(n_ * (c + 1) * words_, 0);
    pair_reach_.assign((c + 1) * words_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (std::size_t pos = c; pos-- > 0;) {
        Word* dst = reach_.data() + (v * (c + 1) + pos) * words_;
        const Word* next = dst + words_;
        std::copy(next, next + words_, dst);
        or_into(dst, v, candidates_[pos]);
      }
    }
    for (std::size_t pos = c; pos-- > 0;) {
      Word* dst = pair_reach_.data() + pos * words_;
      const Word* next = dst + words_;
      std::copy(next, next + words_, dst);
      const Word* row = reach_.data() + (candidates_[pos] * (c + 1) + pos) * words_;
      for (std::size_t i = 0; i < words_; ++i) dst[i] |= row[i];
    }
  }

  struct Worker {
    const LevelSearch& s;
    Shared& shared;
    std::size_t branch;
    std::vector<Vertex> chosen;
    std::vector<Word> covers;  // one cover per depth
    std::vector<Word> scratch;
    std::vector<Vertex> members;
    std::uint64_t nodes = 0;
    bool aborted = false;

    Worker(const LevelSearch& search, std::size_t picks, Shared& sh, std::size_t br)
        : s(search), shared(sh), branch(br), covers((picks + 2) * search.words_, 0),
          scratch(2 * search.words_, 0) {
      members.reserve(search.n_);
    }

    Word* cover(std::size_t depth) { return covers.data() + depth * s.words_; }

    // Appends v and stores the extended geodetic cover at depth + 1.
    void push(Vertex v, std::size_t depth) {
      if (s.mode_ == Mode::Geodetic) {
        Word* dst = cover(depth + 1);
        std::copy(cover(depth), cover(depth) + s.words_, dst);
        s.or_into(dst, v, v);
        for (Vertex p : chosen) s.or_into(dst, v, p);
      }
      chosen.push_back(v);
    }

    bool check_limits() {
      if ((++nodes & 1023U) != 0) return !aborted;
      if (shared.timed_out.load(std::memory_order_relaxed) ||
          shared.best_branch.load(std::memory_order_relaxed) < branch) {
        aborted = true;
      } else if (Clock::now() > shared.deadline) {
        shared.timed_out = true;
        aborted = true;
      }
      return !aborted;
    }

    bool leaf_ok() {
      if (s.mode_ == Mode::Geodetic) return s.is_full(cover(chosen.size() - s.forced_.size()));
      return hull_full();
    }

    // Worklist hull of `chosen` with early exit once everything is reached.
    bool hull_full() {
      Word* hull = scratch.data();
      Word* known = scratch.data() + s.words_;
      std::fill(hull, hull + 2 * s.words_, 0);
      members.assign(chosen.begin(), chosen.end());
      for (Vertex v : members) {
        hull[v / VertexSet::kWordBits] |= Word{1} << (v % VertexSet::kWordBits);
      }
      std::copy(hull, hull + s.words_, known);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (members.size() == s.n_) return true;
        for (std::size_t j = 0; j < i; ++j) s.or_into(hull, members[i], members[j]);
        for (std::size_t w = 0; w < s.words_; ++w) {
          Word fresh = hull[w] & ~known[w];
          known[w] |= fresh;
          while (fresh != 0) {
            members.push_back(static_cast<Vertex>(w * VertexSet::kWordBits + std::countr_zero(fresh)));
            fresh &= fresh - 1;
          }
        }
      }
      return members.size() == s.n_;
    }

    // Can picks from candidates_[pos..] still complete the cover? Pairs of
    // two future picks only count when at least two picks remain.
    bool reachable(std::size_t pos, std::size_t depth, std::size_t remaining) {
      const std::size_t c = s.candidates_.size();
      Word* pot = scratch.data();
      const Word* cur = cover(depth);
      if (remaining >= 2) {
        const Word* pairs = s.pair_reach_.data() + pos * s.words_;
        for (std::size_t i = 0; i < s.words_; ++i) pot[i] = cur[i] | pairs[i];
      } else {
        std::copy(cur, cur + s.words_, pot);
        for (std::size_t i = pos; i < c; ++i) {
          const Vertex v = s.candidates_[i];
          pot[v / VertexSet::kWordBits] |= Word{1} << (v % VertexSet::kWordBits);
        }
      }
      for (Vertex p : chosen) {
        const Word* row = s.reach_.data() + (p * (c + 1) + pos) * s.words_;
        for (std::size_t i = 0; i < s.words_; ++i) pot[i] |= row[i];
      }
      return s.is_full(pot);
    }

    bool dfs(std::size_t pos, std::size_t remaining, std::size_t depth) {
      if (!check_limits()) return false;
      const std::size_t c = s.candidates_.size();
      if (s.mode_ == Mode::Geodetic && !reachable(pos, depth, remaining)) return false;
      for (std::size_t i = pos; i + remaining <= c; ++i) {
        push(s.candidates_[i], depth);
        const bool ok = remaining == 1 ? (check_limits() && leaf_ok()) : dfs(i + 1, remaining - 1, depth + 1);
        if (ok) return true;
        chosen.pop_back();
        if (aborted) return false;
      }
      return false;
    }
  };

  const IntervalTable& t_;
  Mode mode_;
  std::size_t n_;
  std::size_t words_;
  std::vector<Vertex> forced_;
  std::vector<Vertex> candidates_;
  std::vector<Word> full_;
  std::vector<Word> forced_cover_;
  std::vector<Word> reach_;
  std::vector<Word> pair_reach_;
};

struct LevelOutcome {
  std::optional<std::vector<Vertex>> witness;
  bool timed_out = false;
};

LevelOutcome search_level(const LevelSearch& search, std::size_t picks, unsigned workers,
                          LevelSearch::Shared& shared) {
  LevelOutcome out;
  if (picks > search.candidate_count()) return out;
  const std::size_t branches = picks == 0 ? 1 : search.candidate_count() - picks + 1;
  std::vector<std::optional<std::vector<Vertex>>> found(branches);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches || shared.timed_out) return;
      if (shared.best_branch.load() < b) return;
      auto w = search.run_branch(b, picks, shared);
      if (w) {
        found[b] = std::move(w);
        std::size_t cur = shared.best_branch.load();
        while (b < cur && !shared.best_branch.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  const unsigned width = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(branches)));
  if (width == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  // A witness in branch b is final once every branch below b finished
  // without one, which the abort rule guarantees unless the clock ran out.
  for (std::size_t b = 0; b < branches; ++b) {
    if (found[b]) {
      out.witness = std::move(found[b]);
      break;
    }
  }
  out.timed_out = shared.timed_out;
  return out;
}

void attach_certificate(const IntervalTable& t, SolveResult& r) {
  if (r.mode == Mode::Hull) {
    r.hull_trace = convex_hull(t, r.witness);
    return;
  }
  const auto members = r.witness.to_vector();
  for (Vertex w = 0; w < t.order(); ++w) {
    bool done = false;
    for (std::size_t i = 0; i < members.size() && !done; ++i) {
      for (std::size_t j = i; j < members.size() && !done; ++j) {
        if (t.in_interval(members[i], w, members[j])) {
          r.covering.push_back({w, members[i], members[j]});
          done = true;
        }
      }
    }
  }
}

SolveResult run_solver(const IntervalTable& t, SolveOptions opts) {
  const auto start = Clock::now();
  if (!t.eager()) {
    throw Error(ErrorCode::Unsupported, "exact solvers need a precomputed interval table (order <= " +
                                            std::to_string(IntervalTable::kEagerLimit) + ")");
  }
  const VertexSet forced = opts.must_include.value_or(simplicial_vertices(t.graph()));
  if (forced.universe_size() != t.order()) throw Error(ErrorCode::OutOfRange, "must_include universe mismatch");

  SolveResult result;
  result.mode = opts.mode;

  // Upper bound: greedy from Ext(G), extended by the forced set when the
  // caller supplied a different one.
  VertexSet upper = greedy_upper_bound(t, opts.mode);
  if (!forced.is_subset_of(upper)) {
    upper |= forced;
  }

  // Levels below the optimum must be exhausted; that goes fastest with the
  // strongest vertices first, since the reachability prune then sees only
  // weak candidates in the tail. The level that succeeds is searched again
  // in index order for the lexicographically smallest witness.
  std::vector<Vertex> by_index;
  for (Vertex v = 0; v < t.order(); ++v)
    if (!forced.contains(v)) by_index.push_back(v);
  std::vector<Vertex> by_mass = by_index;
  if (opts.mode == Mode::Geodetic) {
    std::vector<std::size_t> mass(t.order(), 0);
    for (Vertex v : by_mass)
      for (Vertex u = 0; u < t.order(); ++u) mass[v] += t.interval(v, u).count();
    std::stable_sort(by_mass.begin(), by_mass.end(), [&](Vertex a, Vertex b) { return mass[a] > mass[b]; });
  }
  const LevelSearch probe(t, opts.mode, forced, by_mass);
  const LevelSearch lex(t, opts.mode, forced, std::move(by_index));
  LevelSearch::Shared shared;
  const auto limit = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opts.time_limit_seconds));
  shared.deadline = start + limit;

  const std::size_t lo = std::max<std::size_t>(forced.count(), 1);
  const std::size_t hi = std::max(upper.count(), lo);
  for (std::size_t k = lo; k <= hi; ++k) {
    const std::size_t picks = k - forced.count();
    shared.best_branch = std::numeric_limits<std::size_t>::max();
    const LevelOutcome level = search_level(probe, picks, opts.parallel_width, shared);
    if (level.timed_out) break;
    if (!level.witness) continue;
    shared.best_branch = std::numeric_limits<std::size_t>::max();
    const LevelOutcome canonical = search_level(lex, picks, opts.parallel_width, shared);
    if (canonical.timed_out) {
      // Optimal value known; keep the probe's witness, flagged non-optimal.
      upper = VertexSet(t.order(), std::span<const Vertex>(*level.witness));
      break;
    }
    result.value = k;
    result.witness = VertexSet(t.order(), std::span<const Vertex>(*canonical.witness));
    result.optimal = true;
    break;
  }
  if (!result.optimal) {
    // Either the clock ran out or (impossible for valid input) no level up to
    // the greedy size succeeded; fall back to the greedy set.
    result.value = upper.count();
    result.witness = upper;
  }
  attach_certificate(t, result);
  result.stats.nodes = shared.nodes;
  result.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

}  // namespace

VertexSet greedy_upper_bound(const IntervalTable& t, Mode mode) {
  VertexSet s = simplicial_vertices(t.graph());
  while (!verifies(t, mode, s)) {
    std::size_t best_size = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (s.contains(v)) continue;
      VertexSet trial = s;
      trial.insert(v);
      const std::size_t size = grow(t, mode, trial).count();
      if (size > best_size) {
        best_size = size;
        best = v;
      }
    }
    s.insert(best);
  }
  return s;
}

SolveResult geodetic_number(const IntervalTable& t, SolveOptions opts) {
  opts.mode = Mode::Geodetic;
  return run_solver(t, std::move(opts));
}

SolveResult hull_number(const IntervalTable& t, SolveOptions opts) {
  opts.mode = Mode::Hull;
  return run_solver(t, std::move(opts));
}

SolveResult solve(const IntervalTable& t, const SolveOptions& opts) { return run_solver(t, opts); }

std::vector<VertexSet> enumerate_sets(const IntervalTable& t, Mode mode, std::size_t k,
                                      const VertexSet& must_include) {
  std::vector<VertexSet> out;
  const std::size_t base = must_include.count();
  if (k < base || k > t.order()) return out;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < t.order(); ++v)
    if (!must_include.contains(v)) free.push_back(v);
  VertexSet cur = must_include;
  auto rec = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (remaining == 0) {
      if (verifies(t, mode, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t i = pos; i + remaining <= free.size(); ++i) {
      cur.insert(free[i]);
      self(self, i + 1, remaining - 1);
      cur.erase(free[i]);
    }
  };
  rec(rec, 0, k - base);
  return out;
}

bool BoundsReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.holds; });
}

const BoundCheck* BoundsReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

BoundsReport bounds_report(const Graph& g, const Graph& h, const SolveOptions& opts) {
  const ProductGraph p = strong_product(g, h);
  const IntervalTable tg(g);
  const IntervalTable th(h);
  const IntervalTable tp(p.graph());
  SolveOptions o = opts;
  o.must_include.reset();
  BoundsReport r;
  auto run = [&](const IntervalTable& t, Mode mode) {
    o.mode = mode;
    const SolveResult res = solve(t, o);
    r.complete = r.complete && res.optimal;
    return res.value;
  };
  r.g_left = run(tg, Mode::Geodetic);
  r.g_right = run(th, Mode::Geodetic);
  r.g_product = run(tp, Mode::Geodetic);
  r.h_left = run(tg, Mode::Hull);
  r.h_right = run(th, Mode::Hull);
  r.h_product = run(tp, Mode::Hull);

  const bool nontrivial = g.order() >= 2 && h.order() >= 2;
  auto le = [&](std::string name, bool applicable, long long lower, long long upper) {
    r.checks.push_back({std::move(name), applicable && r.complete, lower <= upper, upper - lower});
  };
  auto ll = [](std::size_t v) { return static_cast<long long>(v); };
  le("geodetic_lower_min_factors", true, ll(std::min(r.g_left, r.g_right)), ll(r.g_product));
  le("geodetic_upper_product", true, ll(r.g_product), ll(r.g_left * r.g_right));
  le("hull_lower_two", nontrivial, 2, ll(r.h_product));
  le("hull_upper_product", true, ll(r.h_product), ll(r.h_left * r.h_right));
  le("geodetic_at_least_four", nontrivial, 4, ll(r.g_product));
  le("hull_at_most_left", simplicial_vertices(g).empty(), ll(r.h_product), ll(r.h_left));
  le("hull_at_most_right", simplicial_vertices(h).empty(), ll(r.h_product), ll(r.h_right));
  le("hull_le_geodetic_left", true, ll(r.h_left), ll(r.g_left));
  le("hull_le_geodetic_right", true, ll(r.h_right), ll(r.g_right));
  le("hull_le_geodetic_product", true, ll(r.h_product), ll(r.g_product));
  return r;
}

CollapseReport verify_condition_A_collapse(const Graph& g, std::size_t n, const SolveOptions& opts) {
  if (n == 0) throw Error(ErrorCode::BadParams, "K_n needs n >= 1");
  CollapseReport r;
  r.n = n;
  const IntervalTable tg(g);
  SolveOptions o = opts;
  o.must_include.reset();
  o.mode = Mode::Geodetic;
  const SolveResult gs = solve(tg, o);
  r.g_factor = gs.value;
  r.complete = gs.optimal;

  const VertexSet ext = simplicial_vertices(g);
  for (const auto& s : enumerate_sets(tg, Mode::Geodetic, gs.value, ext)) {
    if (condition_A(tg, s)) {
      r.hypothesis_holds = true;
      r.minimum_A_witness = s;
      break;
    }
  }
  for (std::size_t k = gs.value; k <= g.order() && !r.smallest_A_set; ++k) {
    for (const auto& s : enumerate_sets(tg, Mode::Geodetic, k, ext)) {
      if (condition_A(tg, s)) {
        r.smallest_A_set = s;
        break;
      }
    }
  }

  const ProductGraph p = strong_product(g, make_family(FamilySpec::complete(n)));
  const IntervalTable tp(p.graph());
  const SolveResult ps = solve(tp, o);
  r.g_product = ps.value;
  r.complete = r.complete && ps.optimal;

  if (r.smallest_A_set) {
    for (Vertex k = 0; k < n; ++k) {
      VertexSet single(n);
      single.insert(k);
      r.lifted_sets_geodetic = r.lifted_sets_geodetic && is_geodetic(tp, cartesian(p, *r.smallest_A_set, single));
    }
    if (r.complete && r.g_product > r.smallest_A_set->count()) r.lifted_sets_geodetic = false;
  }
  r.holds = !r.hypothesis_holds || !r.complete || r.g_product == r.g_factor;
  return r;
}

}  // namespace geoprod
