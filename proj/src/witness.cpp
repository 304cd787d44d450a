#include "hypavg/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "hypavg/error.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kSlim1Thin4: return "slim1-thin4";
    case WitnessKind::kMinsize1Insize3: return "minsize1-insize3";
    case WitnessKind::kFatInsize1: return "fat-insize1";
  }
  return "";
}

std::optional<WitnessKind> parse_witness_kind(std::string_view s) {
  for (auto k : {WitnessKind::kSlim1Thin4, WitnessKind::kMinsize1Insize3, WitnessKind::kFatInsize1})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

bool meets_target(WitnessKind kind, int param, const TriangleReport& r) {
  if (r.degenerate) return false;
  switch (kind) {
    case WitnessKind::kSlim1Thin4: return r.slim == 1 && r.thin == 4;
    case WitnessKind::kMinsize1Insize3: return r.minsize == 1 && r.insize == HalfInt(3);
    case WitnessKind::kFatInsize1: return 2 * r.slim >= param && r.insize <= HalfInt(1);
  }
  return false;
}

bool verify_witness(const Witness& w) {
  if (!w.found || !is_connected(w.graph)) return false;
  const GraphMetric m(w.graph);
  const auto& t = w.triangle;
  for (const auto* s : {&t.xy, &t.yz, &t.zx})
    if (!is_valid_segment(w.graph, m, *s)) return false;
  const auto r = measure_all(m, t);
  return r == w.report && meets_target(w.kind, w.param, r);
}

namespace {

using Path = std::vector<Vertex>;

// Graph on the alive vertices, relabelled in increasing order.
struct Candidate {
  std::vector<char> alive;
  std::set<Edge> edges;
  std::array<Path, 3> sides;  // x->y, y->z, z->x in original ids

  bool evaluate(WitnessKind kind, int param, Witness* out) const {
    std::vector<Vertex> id(alive.size(), -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) id[v] = next++;
    std::vector<Edge> es;
    for (const auto& [a, b] : edges)
      if (alive[a] && alive[b]) es.emplace_back(id[a], id[b]);
    const Graph g = Graph::from_edges(static_cast<std::size_t>(next), es);
    if (!is_connected(g)) return false;
    const GraphMetric m(g);
    std::array<GeodesicSegment, 3> seg;
    for (int i = 0; i < 3; ++i) {
      seg[i].from = id[sides[i].front()];
      seg[i].to = id[sides[i].back()];
      for (Vertex v : sides[i]) {
        if (id[v] < 0) return false;
        seg[i].vertices.push_back(id[v]);
      }
      if (!is_valid_segment(g, m, seg[i])) return false;
    }
    const auto tri = make_triangle(seg[0], seg[1], seg[2]);
    const auto r = measure_all(m, tri);
    if (!meets_target(kind, param, r)) return false;
    if (out) {
      out->graph = g;
      out->triangle = tri;
      out->report = r;
    }
    return true;
  }
};

void shrink(Candidate& c, WitnessKind kind, int param) {
  std::set<Vertex> keep;
  for (const auto& s : c.sides) keep.insert(s.begin(), s.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < c.alive.size() && !changed; ++v) {
      if (!c.alive[v] || keep.count(static_cast<Vertex>(v))) continue;
      c.alive[v] = 0;
      if (c.evaluate(kind, param, nullptr)) {
        changed = true;
      } else {
        c.alive[v] = 1;
      }
    }
    if (changed) continue;
    for (auto it = c.edges.begin(); it != c.edges.end() && !changed; ++it) {
      const Edge e = *it;
      auto pos = c.edges.erase(it);
      if (c.evaluate(kind, param, nullptr)) {
        changed = true;
        break;
      }
      it = c.edges.insert(pos, e);
    }
  }
}

Graph random_geometric(Engine& rng) {
  std::uniform_int_distribution<int> size(10, 40);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  std::vector<std::array<double, 2>> pts(n);
  for (auto& p : pts) p = {unit(rng), unit(rng)};
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) < 0.3) edges.emplace_back(i, j);
  const Graph g = Graph::from_edges(n, edges);
  const auto comps = connected_components(g);
  const auto big = std::max_element(comps.sizes.begin(), comps.sizes.end()) - comps.sizes.begin();
  std::vector<Vertex> keep;
  for (int v = 0; v < n; ++v)
    if (comps.component_of[v] == big) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Witness fat_witness(int param, std::uint64_t budget) {
  Witness w;
  w.kind = WitnessKind::kFatInsize1;
  w.param = param;
  for (int len = 4; w.attempts < budget && len <= 4 * param + 4; len += 2, ++w.attempts) {
    const int k = len / 2;
    const Vertex y = len, z = len + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    edges.emplace_back(k, y);
    edges.emplace_back(k, z);
    Candidate c;
    c.alive.assign(len + 2, 1);
    c.edges.insert(edges.begin(), edges.end());
    for (int i = 0; i <= k; ++i) c.sides[0].push_back(i);
    c.sides[0].push_back(y);
    c.sides[1] = {y, k, z};
    c.sides[2] = {z};
    for (int i = k; i <= len; ++i) c.sides[2].push_back(i % len);
    if (c.evaluate(w.kind, param, &w)) {
      w.found = true;
      return w;
    }
  }
  return w;
}

}  // namespace

Witness find_witness(WitnessKind kind, std::uint64_t budget, std::uint64_t seed, int param) {
  if (kind == WitnessKind::kFatInsize1) return fat_witness(param, budget);
  Witness w;
  w.kind = kind;
  w.param = param;
  Engine rng(seed);
  constexpr int kPerGraph = 300;
  std::vector<Graph> fixed;
  for (std::size_t r = 2; r <= 6; ++r)
    for (std::size_t c = r; c <= 6; ++c) fixed.push_back(grid_graph(r, c));
  for (std::size_t round = 0; w.attempts < budget; ++round) {
    const Graph g = round < fixed.size() ? fixed[round] : random_geometric(rng);
    if (g.vertex_count() < 3) continue;
    const GraphMetric m(g);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count()) - 1);
    for (int s = 0; s < kPerGraph && w.attempts < budget; ++s, ++w.attempts) {
      const Vertex x = pick(rng), y = pick(rng), z = pick(rng);
      if (x == y || y == z || z == x) continue;
      const auto tri = sample_triangle(m, x, y, z, rng);
      if (!meets_target(kind, param, measure_all(m, tri))) continue;
      Candidate c;
      c.alive.assign(g.vertex_count(), 1);
      for (const auto& e : g.edges()) c.edges.insert(e);
      c.sides = {tri.xy.vertices, tri.yz.vertices, tri.zx.vertices};
      shrink(c, kind, param);
      if (!c.evaluate(kind, param, &w)) throw std::logic_error("witness lost during shrinking");
      w.found = true;
      return w;
    }
  }
  return w;
}

}  // namespace hypavg
