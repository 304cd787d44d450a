#include "hypavg/metric.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypavg/error.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

double FiniteMetric::diameter() const {
  double best = 0;
  const auto n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distance(i, j);
      if (std::isfinite(d)) best = std::max(best, d);
    }
  }
  return best;
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kSentinel) {}

double DistanceMatrix::distance(std::size_t i, std::size_t j) const {
  const int h = hops(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h == kUnreachable ? std::numeric_limits<double>::infinity() : h;
}

double DistanceMatrix::diameter() const {
  int best = 0;
  for (auto v : data_)
    if (v != kSentinel) best = std::max<int>(best, v);
  return best;
}

bool DistanceMatrix::connected() const {
  return std::none_of(data_.begin(), data_.end(), [](auto v) { return v == kSentinel; });
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> frontier{source}, next;
  dist[source] = 0;
  int level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (Vertex u : frontier) {
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

namespace {

void bfs_row(const Graph& g, Vertex source, std::span<std::uint16_t> row, std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(source);
  row[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const auto next = static_cast<std::uint16_t>(row[u] + 1);
    for (Vertex w : g.neighbors(u)) {
      if (row[w] == DistanceMatrix::kSentinel) {
        row[w] = next;
        queue.push_back(w);
      }
    }
  }
}

void check_apsp_capacity(const Graph& g, const ApspOptions& options) {
  if (g.vertex_count() > options.max_vertices) {
    throw CapacityError("all-pairs distances for " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the cap of " + std::to_string(options.max_vertices));
  }
}

}  // namespace

DistanceMatrix apsp(const Graph& g, const ApspOptions& options) {
  check_apsp_capacity(g, options);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  DistanceMatrix d(g.vertex_count());
#pragma omp parallel num_threads(thread_count(options.threads))
  {
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) bfs_row(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
  }
  return d;
}

HalfInt gromov_product(const DistanceMatrix& d, Vertex x, Vertex y, Vertex w) {
  const int dxw = d.hops(x, w), dyw = d.hops(y, w), dxy = d.hops(x, y);
  if (dxw == kUnreachable || dyw == kUnreachable || dxy == kUnreachable) {
    throw PreconditionError("gromov product of points in different components");
  }
  return HalfInt::from_twice(dxw + dyw - dxy);
}

double gromov_product(const FiniteMetric& m, std::size_t x, std::size_t y, std::size_t w) {
  const double dxw = m.distance(x, w), dyw = m.distance(y, w), dxy = m.distance(x, y);
  if (!std::isfinite(dxw) || !std::isfinite(dyw) || !std::isfinite(dxy)) {
    throw PreconditionError("gromov product of points in different components");
  }
  return 0.5 * (dxw + dyw - dxy);
}

FpBreakdown four_point(const FiniteMetric& m, std::size_t x, std::size_t y, std::size_t z,
                       std::size_t w) {
  FpBreakdown b;
  b.P = m.distance(x, y) + m.distance(z, w);
  b.Q = m.distance(x, z) + m.distance(y, w);
  b.R = m.distance(x, w) + m.distance(y, z);
  if (!std::isfinite(b.P) || !std::isfinite(b.Q) || !std::isfinite(b.R)) {
    throw PreconditionError("four-point condition on points in different components");
  }
  std::array<double, 3> s{b.P, b.Q, b.R};
  std::sort(s.begin(), s.end());
  b.fp = 0.5 * (s[2] - s[1]);
  return b;
}

HalfInt four_point_exact(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z, Vertex w) {
  const int v[6] = {d.hops(x, y), d.hops(z, w), d.hops(x, z), d.hops(y, w), d.hops(x, w), d.hops(y, z)};
  for (int h : v) {
    if (h == kUnreachable) throw PreconditionError("four-point condition on points in different components");
  }
  return HalfInt::from_twice(four_point_twice(v[0], v[1], v[2], v[3], v[4], v[5]));
}

namespace {

struct Best {
  std::int64_t twice = -1;
  std::array<std::size_t, 4> witness{};
  void offer(std::int64_t t, std::array<std::size_t, 4> q) {
    if (t > twice || (t == twice && q < witness)) {
      twice = t;
      witness = q;
    }
  }
};

struct BestReal {
  double value = -1;
  std::array<std::size_t, 4> witness{};
  void offer(double v, std::array<std::size_t, 4> q) {
    if (v > value || (v == value && q < witness)) {
      value = v;
      witness = q;
    }
  }
};

}  // namespace

HypResult hyp_exact(const DistanceMatrix& d, const HypOptions& options) {
  if (!d.connected()) throw PreconditionError("hyperbolicity of a disconnected graph");
  const auto n = static_cast<std::int64_t>(d.size());
  if (n < 4) return {};
  Best global;
#pragma omp parallel num_threads(thread_count(options.threads))
  {
    Best local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto ri = d.row(static_cast<Vertex>(i));
      for (std::int64_t j = i + 1; j < n; ++j) {
        const auto rj = d.row(static_cast<Vertex>(j));
        const int dij = ri[j];
        for (std::int64_t k = j + 1; k < n; ++k) {
          const auto rk = d.row(static_cast<Vertex>(k));
          const int dik = ri[k], djk = rj[k];
          for (std::int64_t l = k + 1; l < n; ++l) {
            const auto t = four_point_twice(dij, rk[l], dik, rj[l], ri[l], djk);
            if (t >= local.twice) {
              local.offer(t, {static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                              static_cast<std::size_t>(k), static_cast<std::size_t>(l)});
            }
          }
        }
      }
    }
#pragma omp critical
    global.offer(local.twice, local.witness);
  }
  return {HalfInt::from_twice(global.twice).to_double(), global.witness};
}

HypResult hyp_exact(const FiniteMetric& m, const HypOptions& options) {
  const auto n = static_cast<std::int64_t>(m.size());
  for (std::int64_t j = 1; j < n; ++j) {
    if (!std::isfinite(m.distance(0, j))) throw PreconditionError("hyperbolicity of a disconnected metric");
  }
  if (n < 4) return {};
  BestReal global;
#pragma omp parallel num_threads(thread_count(options.threads))
  {
    BestReal local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        for (std::int64_t k = j + 1; k < n; ++k) {
          for (std::int64_t l = k + 1; l < n; ++l) {
            const auto fp = four_point(m, i, j, k, l).fp;
            local.offer(fp, {static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                             static_cast<std::size_t>(k), static_cast<std::size_t>(l)});
          }
        }
      }
    }
#pragma omp critical
    global.offer(local.value, local.witness);
  }
  return {global.value, global.witness};
}

int diameter(const DistanceMatrix& d) {
  if (!d.connected()) throw PreconditionError("diameter of a disconnected graph");
  return static_cast<int>(d.diameter());
}

}  // namespace hypavg
