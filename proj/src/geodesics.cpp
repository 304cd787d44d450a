#include "hypavg/geodesics.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hypavg/error.hpp"

namespace hypavg {

std::int32_t GeodesicDag::local(Vertex v) const {
  if (!dense_.empty()) return (v >= 0 && static_cast<std::size_t>(v) < dense_.size()) ? dense_[v] : -1;
  auto it = sparse_.find(v);
  return it == sparse_.end() ? -1 : it->second;
}

int GeodesicDag::distance(Vertex v) const {
  const auto l = local(v);
  return l < 0 ? kUnreachable : level_[l];
}

std::vector<Vertex> GeodesicDag::predecessors(Vertex v) const {
  std::vector<Vertex> out;
  const auto l = local(v);
  if (l < 0) return out;
  for (std::size_t i = pred_off_[l]; i < pred_off_[l + 1]; ++i) out.push_back(vertices_[preds_[i]]);
  return out;
}

PathCount GeodesicDag::path_count(Vertex v) const {
  const auto l = local(v);
  if (l < 0) return 0;
  return wide_.empty() ? PathCount(narrow_[l]) : wide_[l];
}

class DagBuilder {
 public:
  // Layered BFS from the source; in_scope(w, level) filters candidate
  // vertices of the next layer, max_level bounds the depth.
  template <class InScope>
  static void build(GeodesicDag& dag, const Graph& g, Vertex source, int max_level, InScope in_scope) {
    auto find = [&dag](Vertex v) -> std::int32_t {
      if (!dag.dense_.empty()) return dag.dense_[v];
      auto it = dag.sparse_.find(v);
      return it == dag.sparse_.end() ? -1 : it->second;
    };
    auto insert = [&dag](Vertex v) {
      const auto id = static_cast<std::int32_t>(dag.vertices_.size());
      if (!dag.dense_.empty()) {
        dag.dense_[v] = id;
      } else {
        dag.sparse_.emplace(v, id);
      }
      dag.vertices_.push_back(v);
    };

    dag.source_ = source;
    insert(source);
    dag.level_.push_back(0);
    dag.pred_off_ = {0, 0};
    dag.narrow_.push_back(1);

    std::size_t begin = 0, end = 1;
    for (int k = 0; begin < end && k < max_level; ++k) {
      for (std::size_t li = begin; li < end; ++li) {
        for (Vertex w : g.neighbors(dag.vertices_[li])) {
          if (!in_scope(w, k + 1) || find(w) >= 0) continue;
          insert(w);
          dag.level_.push_back(k + 1);
        }
      }
      const std::size_t next_end = dag.vertices_.size();
      for (std::size_t li = end; li < next_end; ++li) {
        std::uint64_t narrow = 0;
        bool overflow = !dag.wide_.empty();
        PathCount wide = 0;
        for (Vertex u : g.neighbors(dag.vertices_[li])) {
          const auto lu = find(u);
          if (lu < 0 || dag.level_[lu] != k) continue;
          dag.preds_.push_back(lu);
          if (!overflow) {
            overflow = __builtin_add_overflow(narrow, dag.narrow_[lu], &narrow);
          }
        }
        dag.pred_off_.push_back(dag.preds_.size());
        if (overflow) {
          if (dag.wide_.empty()) promote(dag);
          for (std::size_t i = dag.pred_off_[li]; i < dag.pred_off_[li + 1]; ++i) wide += dag.wide_[dag.preds_[i]];
          dag.wide_.push_back(std::move(wide));
        } else {
          dag.narrow_.push_back(narrow);
        }
      }
      begin = end;
      end = next_end;
    }
    if (!dag.wide_.empty()) dag.narrow_.clear();
  }

 private:
  static void promote(GeodesicDag& dag) {
    dag.wide_.reserve(dag.narrow_.size() + 1);
    for (auto c : dag.narrow_) dag.wide_.emplace_back(c);
  }
};

// Read access for the sampler and enumerator.
struct DagAccess {
  static const std::vector<Vertex>& vertices(const GeodesicDag& d) { return d.vertices_; }
  static const std::vector<std::size_t>& pred_off(const GeodesicDag& d) { return d.pred_off_; }
  static const std::vector<std::int32_t>& preds(const GeodesicDag& d) { return d.preds_; }
  static const std::vector<std::uint64_t>& narrow(const GeodesicDag& d) { return d.narrow_; }
  static const std::vector<PathCount>& wide(const GeodesicDag& d) { return d.wide_; }
  static std::int32_t local(const GeodesicDag& d, Vertex v) { return d.local(v); }
  static std::vector<std::int32_t>& dense(GeodesicDag& d) { return d.dense_; }
};

GeodesicDag build_dag(const Graph& g, Vertex source) {
  GeodesicDag dag;
  DagAccess::dense(dag).assign(g.vertex_count(), -1);
  DagBuilder::build(dag, g, source, std::numeric_limits<int>::max(), [](Vertex, int) { return true; });
  return dag;
}

namespace {

template <class Hops>
GeodesicDag pair_dag(const Graph& g, Hops hops, Vertex source, Vertex target) {
  const int total = hops(source, target);
  if (total == kUnreachable) throw PreconditionError("no geodesic between vertices in different components");
  GeodesicDag dag;
  DagBuilder::build(dag, g, source, total, [&](Vertex w, int level) {
    return hops(source, w) == level && hops(w, target) == total - level;
  });
  return dag;
}

}  // namespace

GeodesicDag build_pair_dag(const Graph& g, const GraphMetric& m, Vertex source, Vertex target) {
  return pair_dag(g, [&m](Vertex a, Vertex b) { return m.hops(a, b); }, source, target);
}

GeodesicDag build_pair_dag(const Graph& g, const DistanceMatrix& d, Vertex source, Vertex target) {
  return pair_dag(g, [&d](Vertex a, Vertex b) { return d.hops(a, b); }, source, target);
}

GeodesicSegment GeodesicSegment::reversed() const {
  GeodesicSegment r{to, from, vertices};
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

bool is_valid_segment(const Graph& g, const GraphMetric& m, const GeodesicSegment& s) {
  if (s.vertices.empty() || s.vertices.front() != s.from || s.vertices.back() != s.to) return false;
  if (m.hops(s.from, s.to) != static_cast<int>(s.length())) return false;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (m.hops(s.from, s.vertices[i]) != static_cast<int>(i)) return false;
    if (i > 0 && !g.has_edge(s.vertices[i - 1], s.vertices[i])) return false;
  }
  return true;
}

PathCount uniform_below(const PathCount& bound, Engine& rng) {
  const auto bits = boost::multiprecision::msb(bound) + 1;
  const auto words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
  for (;;) {
    PathCount r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t chunk = rng();
      if (w == 0) chunk &= top_mask;
      r <<= 64;
      r |= chunk;
    }
    if (r < bound) return r;
  }
}

GeodesicSegment sample_geodesic(const GeodesicDag& dag, Vertex target, Engine& rng) {
  const auto& verts = DagAccess::vertices(dag);
  const auto& off = DagAccess::pred_off(dag);
  const auto& preds = DagAccess::preds(dag);
  const auto& narrow = DagAccess::narrow(dag);
  const auto& wide = DagAccess::wide(dag);
  std::int32_t cur = DagAccess::local(dag, target);
  if (cur < 0) throw PreconditionError("target " + std::to_string(target) + " is not reachable from the source");

  GeodesicSegment seg{dag.source(), target, {}};
  seg.vertices.push_back(target);
  while (cur != 0) {
    const std::size_t lo = off[cur], hi = off[cur + 1];
    std::int32_t chosen = preds[lo];
    if (hi - lo > 1) {
      if (wide.empty()) {
        std::uniform_int_distribution<std::uint64_t> pick(0, narrow[cur] - 1);
        std::uint64_t r = pick(rng);
        for (std::size_t i = lo; i < hi; ++i) {
          if (r < narrow[preds[i]]) {
            chosen = preds[i];
            break;
          }
          r -= narrow[preds[i]];
        }
      } else {
        PathCount r = uniform_below(wide[cur], rng);
        for (std::size_t i = lo; i < hi; ++i) {
          if (r < wide[preds[i]]) {
            chosen = preds[i];
            break;
          }
          r -= wide[preds[i]];
        }
      }
    }
    cur = chosen;
    seg.vertices.push_back(verts[cur]);
  }
  std::reverse(seg.vertices.begin(), seg.vertices.end());
  return seg;
}

std::vector<GeodesicSegment> enumerate_geodesics(const GeodesicDag& dag, Vertex target, std::uint64_t cap) {
  const auto sigma = dag.path_count(target);
  if (sigma == 0) throw PreconditionError("target " + std::to_string(target) + " is not reachable from the source");
  if (sigma > cap) {
    throw CapacityError("vertex pair (" + std::to_string(dag.source()) + ", " + std::to_string(target) + ") has " +
                        sigma.str() + " geodesics, above the cap of " + std::to_string(cap));
  }
  const auto& verts = DagAccess::vertices(dag);
  const auto& off = DagAccess::pred_off(dag);
  const auto& preds = DagAccess::preds(dag);

  std::vector<GeodesicSegment> out;
  out.reserve(static_cast<std::size_t>(sigma));
  std::vector<std::int32_t> stack{DagAccess::local(dag, target)};
  std::vector<std::size_t> next{0};
  // depth-first over predecessor choices; stack holds the partial path back from target
  while (!stack.empty()) {
    const auto cur = stack.back();
    if (cur == 0) {
      GeodesicSegment seg{dag.source(), target, {}};
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) seg.vertices.push_back(verts[*it]);
      out.push_back(std::move(seg));
      stack.pop_back();
      next.pop_back();
      continue;
    }
    auto& i = next.back();
    if (off[cur] + i < off[cur + 1]) {
      stack.push_back(preds[off[cur] + i]);
      ++i;
      next.push_back(0);
    } else {
      stack.pop_back();
      next.pop_back();
    }
  }
  return out;
}

GeodesicTriangle make_triangle(GeodesicSegment xy, GeodesicSegment yz, GeodesicSegment zx) {
  GeodesicTriangle t;
  t.x = xy.from;
  t.y = yz.from;
  t.z = zx.from;
  if (xy.to != t.y || yz.to != t.z || zx.to != t.x) {
    throw std::invalid_argument("triangle sides do not share their corners");
  }
  t.xy = std::move(xy);
  t.yz = std::move(yz);
  t.zx = std::move(zx);
  t.degenerate = t.x == t.y || t.y == t.z || t.z == t.x;
  return t;
}

// Pendant trees are crossed along their unique paths; only the part between
// the two roots is drawn, from a DAG over the core.
namespace {

// Path counts over I(s,t) in reusable dense arrays; same law and same draws
// as sample_geodesic on the pair DAG. False when a count overflows 64 bits.
bool sample_core_fast(const Graph& g, const DistanceMatrix& d, Vertex s, Vertex t, Engine& rng,
                      std::vector<Vertex>& out) {
  thread_local std::vector<std::uint64_t> count;
  thread_local std::vector<Vertex> touched, layer, next;
  if (count.size() < g.vertex_count()) count.assign(g.vertex_count(), 0);
  const int total = d.hops(s, t);
  bool ok = true;
  count[s] = 1;
  touched.assign(1, s);
  layer.assign(1, s);
  for (int k = 1; k <= total && ok; ++k) {
    next.clear();
    for (Vertex x : layer)
      for (Vertex w : g.neighbors(x)) {
        if (d.hops(s, w) != k || d.hops(w, t) != total - k) continue;
        if (count[w] == 0) {
          next.push_back(w);
          touched.push_back(w);
        }
        if (__builtin_add_overflow(count[w], count[x], &count[w])) ok = false;
      }
    layer.swap(next);
  }
  if (ok) {
    const std::size_t start = out.size();
    Vertex cur = t;
    out.push_back(cur);
    for (int k = total; k > 0; --k) {
      Vertex chosen = -1;
      int preds = 0;
      for (Vertex w : g.neighbors(cur))
        if (count[w] && d.hops(s, w) == k - 1) {
          if (chosen < 0) chosen = w;
          ++preds;
        }
      if (preds > 1) {
        std::uniform_int_distribution<std::uint64_t> pick(0, count[cur] - 1);
        std::uint64_t r = pick(rng);
        for (Vertex w : g.neighbors(cur)) {
          if (!count[w] || d.hops(s, w) != k - 1) continue;
          if (r < count[w]) {
            chosen = w;
            break;
          }
          r -= count[w];
        }
      }
      cur = chosen;
      out.push_back(cur);
    }
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  }
  for (Vertex v : touched) count[v] = 0;
  return ok;
}

}  // namespace

GeodesicSegment sample_side(const GraphMetric& m, Vertex a, Vertex b, Engine& rng) {
  GeodesicSegment seg{a, b, {}};
  if (a == b) {
    seg.vertices.push_back(a);
    return seg;
  }
  std::vector<Vertex> tail;  // b up to its root, reversed at the end
  Vertex u = a, v = b;
  if (m.slot(a) == m.slot(b)) {
    while (m.depth(u) > m.depth(v)) {
      seg.vertices.push_back(u);
      u = m.parent(u);
    }
    while (m.depth(v) > m.depth(u)) {
      tail.push_back(v);
      v = m.parent(v);
    }
    while (u != v) {
      seg.vertices.push_back(u);
      tail.push_back(v);
      u = m.parent(u);
      v = m.parent(v);
    }
    seg.vertices.push_back(u);
  } else {
    for (; m.depth(u) > 0; u = m.parent(u)) seg.vertices.push_back(u);
    for (; m.depth(v) > 0; v = m.parent(v)) tail.push_back(v);
    std::vector<Vertex> core;
    if (!sample_core_fast(m.core_graph(), m.core_distances(), m.slot(u), m.slot(v), rng, core)) {
      core = sample_geodesic(build_pair_dag(m.core_graph(), m.core_distances(), m.slot(u), m.slot(v)), m.slot(v), rng)
                 .vertices;
    }
    for (Vertex c : core) seg.vertices.push_back(m.core_vertex(c));
  }
  seg.vertices.insert(seg.vertices.end(), tail.rbegin(), tail.rend());
  return seg;
}

GeodesicTriangle sample_triangle(const GraphMetric& m, Vertex x, Vertex y, Vertex z, Engine& rng) {
  if (m.hops(x, y) == kUnreachable || m.hops(y, z) == kUnreachable) {
    throw PreconditionError("triangle corners lie in different components");
  }
  auto xy = sample_side(m, x, y, rng);
  auto yz = sample_side(m, y, z, rng);
  auto zx = sample_side(m, z, x, rng);
  return make_triangle(std::move(xy), std::move(yz), std::move(zx));
}

InternalPoints locate_internal_points(const GraphMetric& m, const GeodesicTriangle& tri) {
  if (tri.degenerate) throw PreconditionError("internal points of a degenerate triangle are undefined");
  const int dxy = m.hops(tri.x, tri.y), dyz = m.hops(tri.y, tri.z), dzx = m.hops(tri.z, tri.x);
  // <x,z>_y, <y,x>_z, <z,y>_x in doubled units
  const auto at_y = HalfInt::from_twice(dxy + dyz - dzx);
  const auto at_z = HalfInt::from_twice(dyz + dzx - dxy);
  const auto at_x = HalfInt::from_twice(dzx + dxy - dyz);
  return {SegmentPoint{tri.yz.vertices, at_y}, SegmentPoint{tri.zx.vertices, at_z},
          SegmentPoint{tri.xy.vertices, at_x}};
}

HalfInt point_distance(const GraphMetric& m, const SegmentPoint& p, const SegmentPoint& q) {
  if (p.at_vertex() && q.at_vertex()) return HalfInt(m.hops(p.vertex(), q.vertex()));
  if (p.at_vertex() != q.at_vertex()) {
    const Vertex v = p.at_vertex() ? p.vertex() : q.vertex();
    const auto [a, b] = p.at_vertex() ? q.edge() : p.edge();
    return HalfInt::from_twice(1 + 2 * std::min(m.hops(v, a), m.hops(v, b)));
  }
  const auto [a, b] = p.edge();
  const auto [c, d] = q.edge();
  if ((a == c && b == d) || (a == d && b == c)) return HalfInt(0);
  const int best = std::min({m.hops(a, c), m.hops(a, d), m.hops(b, c), m.hops(b, d)});
  return HalfInt(1 + best);
}

}  // namespace hypavg
