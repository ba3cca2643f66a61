#include "geoprod/convexity.hpp"

#include <algorithm>
#include <string>

#include "geoprod/error.hpp"

namespace geoprod {

namespace {

void require_nonempty(const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "operator applied to the empty set");
}

void require_universe(const IntervalTable& t, const VertexSet& s) {
  if (s.universe_size() != t.order()) {
    throw Error(ErrorCode::OutOfRange, "vertex set universe " + std::to_string(s.universe_size()) +
                                           " does not match graph order " + std::to_string(t.order()));
  }
}

}  // namespace

IntervalTable::IntervalTable(Graph g)
    : graph_(std::move(g)), n_(graph_.order()), words_(VertexSet::words_for(n_)) {
  if (n_ > kEagerLimit) return;
  table_.assign(n_ * n_ * words_, 0);
  const auto& d = graph_.distances();
  for (Vertex u = 0; u < n_; ++u) {
    const auto du = d.row(u);
    for (Vertex v = u; v < n_; ++v) {
      const auto dv = d.row(v);
      const Distance duv = du[v];
      Word* dst = table_.data() + (static_cast<std::size_t>(u) * n_ + v) * words_;
      for (Vertex w = 0; w < n_; ++w) {
        if (du[w] + dv[w] == duv) dst[w / VertexSet::kWordBits] |= Word{1} << (w % VertexSet::kWordBits);
      }
      std::copy(dst, dst + words_, table_.data() + (static_cast<std::size_t>(v) * n_ + u) * words_);
    }
  }
}

void IntervalTable::check(Vertex v) const {
  if (v >= n_) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
}

bool IntervalTable::in_interval(Vertex u, Vertex w, Vertex v) const {
  check(u);
  check(v);
  check(w);
  const auto& d = graph_.distances();
  return d.at(u, w) + d.at(w, v) == d.at(u, v);
}

void IntervalTable::accumulate(Vertex u, Vertex v, std::span<Word> acc) const {
  if (eager()) {
    const auto src = interval_words(u, v);
    for (std::size_t i = 0; i < words_; ++i) acc[i] |= src[i];
    return;
  }
  const auto& d = graph_.distances();
  const auto du = d.row(u);
  const auto dv = d.row(v);
  const Distance duv = du[v];
  for (Vertex w = 0; w < n_; ++w) {
    if (du[w] + dv[w] == duv) acc[w / VertexSet::kWordBits] |= Word{1} << (w % VertexSet::kWordBits);
  }
}

VertexSet IntervalTable::interval(Vertex u, Vertex v) const {
  check(u);
  check(v);
  VertexSet out(n_);
  accumulate(u, v, out.words());
  return out;
}

VertexSet interval(const IntervalTable& t, Vertex u, Vertex v) { return t.interval(u, v); }

VertexSet closure(const IntervalTable& t, const VertexSet& s) {
  require_nonempty(s);
  require_universe(t, s);
  VertexSet out(t.order());
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) t.accumulate(members[i], members[j], out.words());
  }
  return out;
}

VertexSet closure_power(const IntervalTable& t, const VertexSet& s, std::size_t r) {
  require_nonempty(s);
  VertexSet cur = s;
  for (std::size_t i = 0; i < r; ++i) {
    VertexSet next = closure(t, cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

HullTrace convex_hull(const IntervalTable& t, const VertexSet& s) {
  require_nonempty(s);
  HullTrace trace;
  trace.stages.push_back(s);
  for (;;) {
    VertexSet next = closure(t, trace.stages.back());
    if (next == trace.stages.back()) break;
    trace.stages.push_back(std::move(next));
  }
  trace.iterations = trace.stages.size() - 1;
  return trace;
}

VertexSet hull_of(const IntervalTable& t, const VertexSet& s) {
  require_nonempty(s);
  require_universe(t, s);
  const std::size_t n = t.order();
  VertexSet hull = s;
  std::vector<Vertex> members = s.to_vector();
  members.reserve(n);
  VertexSet known = s;
  std::size_t known_count = members.size();
  for (std::size_t i = 0; i < members.size() && known_count < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) t.accumulate(members[i], members[j], hull.words());
    VertexSet fresh = hull - known;
    if (!fresh.empty()) {
      fresh.for_each([&](Vertex v) { members.push_back(v); });
      known |= fresh;
      known_count = members.size();
    }
  }
  return hull;
}

bool is_geodetic(const IntervalTable& t, const VertexSet& s) { return closure(t, s).is_full(); }

bool is_hull(const IntervalTable& t, const VertexSet& s) { return hull_of(t, s).is_full(); }

bool is_convex(const IntervalTable& t, const VertexSet& s) { return closure(t, s) == s; }

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet ext(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v).to_vector();
    bool clique = true;
    for (std::size_t i = 0; i < nbrs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < nbrs.size() && clique; ++j) clique = g.adjacent(nbrs[i], nbrs[j]);
    if (clique) ext.insert(v);
  }
  return ext;
}

bool is_extreme_geodesic(const IntervalTable& t) {
  const VertexSet ext = simplicial_vertices(t.graph());
  return !ext.empty() && is_geodetic(t, ext);
}

bool is_extreme_geodesic(const Graph& g) { return is_extreme_geodesic(IntervalTable(g)); }

bool condition_A(const IntervalTable& t, const VertexSet& s) {
  require_nonempty(s);
  require_universe(t, s);
  const auto members = s.to_vector();
  for (Vertex x : members) {
    bool covered = false;
    for (std::size_t i = 0; i < members.size() && !covered; ++i) {
      if (members[i] == x) continue;
      for (std::size_t j = i + 1; j < members.size() && !covered; ++j) {
        if (members[j] == x) continue;
        covered = t.in_interval(members[i], x, members[j]);
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool condition_B(const IntervalTable& t, const VertexSet& s) {
  require_universe(t, s);
  if (s.count() < 2) throw Error(ErrorCode::TooSmall, "condition (B) needs at least two vertices");
  std::size_t isolated = 0;
  s.for_each([&](Vertex x) {
    VertexSet rest = s;
    rest.erase(x);
    if (!closure(t, rest).contains(x)) ++isolated;
  });
  return isolated >= 2;
}

}  // namespace geoprod
