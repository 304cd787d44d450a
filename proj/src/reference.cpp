#include "hypavg/reference.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>

namespace hypavg::ref {

Dist apsp(const Graph& g) {
  const auto n = g.vertex_count();
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  Dist d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::int64_t hyp_twice(const Dist& d) {
  const auto n = d.size();
  std::int64_t best = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          std::array<int, 3> s = {d[x][y] + d[z][w], d[x][z] + d[y][w], d[x][w] + d[y][z]};
          std::sort(s.begin(), s.end());
          best = std::max<std::int64_t>(best, s[2] - s[1]);
        }
  return best;
}

std::vector<std::vector<Vertex>> all_geodesics(const Graph& g, const Dist& d, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{a};
  auto extend = [&](auto&& self) -> void {
    const Vertex v = path.back();
    if (v == b) {
      out.push_back(path);
      return;
    }
    for (Vertex u : g.neighbors(v)) {
      if (d[a][u] == d[a][v] + 1 && d[u][b] == d[v][b] - 1) {
        path.push_back(u);
        self(self);
        path.pop_back();
      }
    }
  };
  extend(extend);
  return out;
}

namespace {

using Path = std::vector<Vertex>;

int set_distance(const Dist& d, Vertex v, const Path& p, const Path& q) {
  int best = std::numeric_limits<int>::max();
  for (Vertex u : p) best = std::min(best, d[v][u]);
  for (Vertex u : q) best = std::min(best, d[v][u]);
  return best;
}

// A point of the metric graph at twice-offset t along a path.
struct Point {
  Vertex a, b;  // a == b at a vertex
};

Point point_at(const Path& p, std::int64_t twice) {
  const auto i = static_cast<std::size_t>(twice / 2);
  if (twice % 2 == 0) return {p[i], p[i]};
  return {p[i], p[i + 1]};
}

// Twice the distance in the metric graph.
std::int64_t point_distance_twice(const Dist& d, Point p, Point q) {
  if (std::minmax(p.a, p.b) == std::minmax(q.a, q.b)) return 0;
  const std::int64_t hp = p.a == p.b ? 0 : 1, hq = q.a == q.b ? 0 : 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (Vertex u : {p.a, p.b})
    for (Vertex v : {q.a, q.b}) best = std::min(best, hp + hq + 2 * static_cast<std::int64_t>(d[u][v]));
  return best;
}

}  // namespace

int slim(const Dist& d, const Path& xy, const Path& yz, const Path& zx) {
  int best = 0;
  for (Vertex v : xy) best = std::max(best, set_distance(d, v, yz, zx));
  for (Vertex v : yz) best = std::max(best, set_distance(d, v, xy, zx));
  for (Vertex v : zx) best = std::max(best, set_distance(d, v, xy, yz));
  return best;
}

int minsize(const Dist& d, const Path& xy, const Path& yz, const Path& zx) {
  int best = std::numeric_limits<int>::max();
  for (Vertex a : xy)
    for (Vertex b : yz)
      for (Vertex c : zx) best = std::min(best, std::max({d[a][b], d[b][c], d[a][c]}));
  return best;
}

Measures measure(const Dist& d, const Path& xy, const Path& yz, const Path& zx) {
  const Vertex x = xy.front(), y = yz.front(), z = zx.front();
  Measures m;
  if (x == y || y == z || z == x) return m;
  m.slim = slim(d, xy, yz, zx);
  m.minsize = minsize(d, xy, yz, zx);
  Path yx(xy.rbegin(), xy.rend()), zy(yz.rbegin(), yz.rend()), xz(zx.rbegin(), zx.rend());
  // corner, the two sides leaving it, and the far pair
  auto corner = [&](Vertex c, const Path& p, const Path& q, Vertex u, Vertex v) {
    const int gp2 = d[c][u] + d[c][v] - d[u][v];  // twice the Gromov product
    for (int r = 0; 2 * r <= gp2; ++r) m.thin = std::max(m.thin, d[p[r]][q[r]]);
  };
  corner(x, xy, xz, y, z);
  corner(y, yz, yx, z, x);
  corner(z, zx, zy, x, y);
  // internal point on [y,z] sits at twice-offset d(y,x) + d(y,z) - d(x,z) from y
  const Point m_yz = point_at(yz, d[y][x] + d[y][z] - d[x][z]);
  const Point m_zx = point_at(zx, d[z][y] + d[z][x] - d[y][x]);
  const Point m_xy = point_at(xy, d[x][z] + d[x][y] - d[z][y]);
  m.insize_twice = std::max({point_distance_twice(d, m_yz, m_zx), point_distance_twice(d, m_zx, m_xy),
                             point_distance_twice(d, m_xy, m_yz)});
  return m;
}

namespace {

// all_geodesics for every ordered pair
std::vector<std::vector<std::vector<Path>>> path_table(const Graph& g, const Dist& d) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<std::vector<std::vector<Path>>> t(n, std::vector<std::vector<Path>>(n));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) t[a][b] = all_geodesics(g, d, a, b);
  return t;
}

}  // namespace

WorstCase worst_case(const Graph& g) {
  const auto d = ref::apsp(g);
  const auto paths = path_table(g, d);
  const auto n = static_cast<Vertex>(g.vertex_count());
  WorstCase out;
  out.hyp_twice = hyp_twice(d);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        for (const auto& p : paths[x][y])
          for (const auto& q : paths[y][z])
            for (const auto& r : paths[z][x]) {
              const auto m = measure(d, p, q, r);
              out.max.slim = std::max(out.max.slim, m.slim);
              out.max.thin = std::max(out.max.thin, m.thin);
              out.max.minsize = std::max(out.max.minsize, m.minsize);
              out.max.insize_twice = std::max(out.max.insize_twice, m.insize_twice);
            }
      }
  return out;
}

Rational avg_fp(const Dist& d, const std::vector<Rational>& w) {
  const auto n = d.size();
  Rational total = 0, mass = 0;
  for (const auto& x : w) mass += x;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t v = 0; v < n; ++v) {
          const Rational p = w[x] * w[y] * w[z] * w[v];
          if (p == 0) continue;
          std::array<int, 3> s = {d[x][y] + d[z][v], d[x][z] + d[y][v], d[x][v] + d[y][z]};
          std::sort(s.begin(), s.end());
          total += p * Rational(s[2] - s[1], 2);
        }
  return total / (mass * mass * mass * mass);
}

Averages avg_triangles(const Graph& g, const Dist& d, const std::vector<Rational>& w) {
  const auto n = static_cast<Vertex>(d.size());
  const auto paths = path_table(g, d);
  Rational mass = 0;
  for (const auto& x : w) mass += x;
  Averages a;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        const Rational p = w[x] * w[y] * w[z];
        if (p == 0 || x == y || y == z || x == z) continue;
        const auto &ps = paths[x][y], &qs = paths[y][z], &rs = paths[z][x];
        Averages local;
        for (const auto& pp : ps)
          for (const auto& qq : qs)
            for (const auto& rr : rs) {
              const auto m = measure(d, pp, qq, rr);
              local.slim += m.slim;
              local.thin += m.thin;
              local.minsize += m.minsize;
              local.insize += Rational(m.insize_twice, 2);
            }
        const Rational k = p / (static_cast<std::int64_t>(ps.size()) * static_cast<std::int64_t>(qs.size()) *
                                static_cast<std::int64_t>(rs.size()));
        a.slim += k * local.slim;
        a.thin += k * local.thin;
        a.minsize += k * local.minsize;
        a.insize += k * local.insize;
      }
  const Rational m3 = mass * mass * mass;
  a.slim /= m3;
  a.thin /= m3;
  a.minsize /= m3;
  a.insize /= m3;
  return a;
}

Estimate serial_avg_fp(const FiniteMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts) {
  require_connected_support(m, dist);
  const auto* graph = dynamic_cast<const GraphMetric*>(&m);
  std::vector<double> values(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) values[i] = fp_sample(m, graph, dist, opts.seed, i, opts.distinct);
  return summarize(values, 0.5 * m.diameter(), opts.seed);
}

AvgReport serial_avg_triangles(const GraphMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts) {
  require_connected_support(m, dist);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> slim(opts.samples), thin(opts.samples), minsize(opts.samples), insize(opts.samples);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const auto r = triangle_sample(m, dist, opts.seed, i, opts.distinct);
    slim[i] = r.slim;
    thin[i] = r.thin;
    minsize[i] = r.minsize;
    insize[i] = r.insize.to_double();
  }
  AvgReport rep;
  rep.diameter = m.diameter();
  rep.slim = summarize(slim, rep.diameter, opts.seed);
  rep.thin = summarize(thin, rep.diameter, opts.seed);
  rep.minsize = summarize(minsize, rep.diameter, opts.seed);
  rep.insize = summarize(insize, rep.diameter, opts.seed);
  rep.triangle_samples = opts.samples;
  rep.seed = opts.seed;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hypavg::ref
