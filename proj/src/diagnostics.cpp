#include "hypavg/diagnostics.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hypavg/error.hpp"
#include "hypavg/parallel.hpp"
#include "hypavg/triangle_measures.hpp"

namespace hypavg {

WorstCase worst_case_measures(const Graph& g, std::uint64_t geodesic_cap) {
  if (!is_connected(g)) throw PreconditionError("worst-case measures need a connected graph");
  const auto n = g.vertex_count();
  const GraphMetric m(g);
  WorstCase out;
  {
    const auto hyp = hyp_exact(apsp(g));
    out.hyp = HalfInt::from_twice(static_cast<std::int64_t>(std::llround(2 * hyp.value)));
    for (int i = 0; i < 4; ++i) out.hyp_witness[i] = static_cast<Vertex>(hyp.witness[i]);
  }

  std::vector<std::vector<std::vector<GeodesicSegment>>> paths(n);  // paths[a][b], a < b
  for (std::size_t a = 0; a < n; ++a) {
    const auto dag = build_dag(g, static_cast<Vertex>(a));
    paths[a].resize(n);
    for (std::size_t b = a + 1; b < n; ++b) paths[a][b] = enumerate_geodesics(dag, static_cast<Vertex>(b), geodesic_cap);
  }

  const auto nn = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(thread_count())
  {
    TriangleReport best;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t a = 0; a < nn; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (const auto& p : paths[a][b])
            for (const auto& q : paths[b][c])
              for (const auto& r : paths[a][c]) {
                const auto rep = measure_all(m, make_triangle(p, q, r.reversed()));
                best.slim = std::max(best.slim, rep.slim);
                best.thin = std::max(best.thin, rep.thin);
                best.minsize = std::max(best.minsize, rep.minsize);
                best.insize = std::max(best.insize, rep.insize);
              }
#pragma omp critical
    {
      out.slim = std::max(out.slim, best.slim);
      out.thin = std::max(out.thin, best.thin);
      out.minsize = std::max(out.minsize, best.minsize);
      out.insize = std::max(out.insize, best.insize);
    }
  }
  return out;
}

std::uint64_t traffic(const DistanceMatrix& d, Vertex w) {
  const auto n = static_cast<Vertex>(d.size());
  const auto rw = d.row(w);
  std::uint64_t count = 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto rx = d.row(x);
    if (rx[w] == DistanceMatrix::kSentinel) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (rx[y] != DistanceMatrix::kSentinel && rx[w] + rw[y] == rx[y]) ++count;
    }
  }
  return count;
}

std::vector<std::uint64_t> traffic_all(const DistanceMatrix& d, int threads) {
  const auto n = static_cast<std::int64_t>(d.size());
  std::vector<std::uint64_t> out(d.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(threads))
  for (std::int64_t w = 0; w < n; ++w) out[w] = traffic(d, static_cast<Vertex>(w));
  return out;
}

double traffic_bound(int degree, int diameter) {
  if (degree < 3) throw std::invalid_argument("the traffic bound needs degree >= 3");
  const double d = degree;
  return d * d / ((d - 2) * (d - 2)) * std::pow(d - 1, diameter);
}

DsplStats dspl_stats(const GraphMetric& m, std::size_t pair_samples, std::uint64_t seed) {
  if (!m.connected()) throw PreconditionError("distance statistics need a connected graph");
  const auto n = static_cast<Vertex>(m.size());
  if (n < 2) throw PreconditionError("distance statistics need at least two vertices");
  DsplStats s;
  std::vector<double> values;
  if (pair_samples == 0) {
    s.all_pairs = true;
    values.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        if (x != y) values.push_back(m.hops(x, y));
  } else {
    values.resize(pair_samples);
    const auto k = static_cast<std::int64_t>(pair_samples);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t i = 0; i < k; ++i) {
      Engine rng = make_stream(seed, static_cast<std::size_t>(i));
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      const Vertex x = pick(rng);
      Vertex y = pick(rng);
      while (y == x) y = pick(rng);
      values[i] = m.hops(x, y);
    }
  }
  s.pairs = values.size();
  s.mean = pairwise_sum(values) / static_cast<double>(values.size());
  for (auto& v : values) v = (v - s.mean) * (v - s.mean);
  s.variance = values.size() > 1 ? pairwise_sum(values) / static_cast<double>(values.size() - 1) : 0.0;
  return s;
}

double dspl_predicted_variance(int degree) {
  const double l = std::log(static_cast<double>(degree - 1));
  return std::numbers::pi * std::numbers::pi / (6 * l * l) + 1.0 / 12.0;
}

NeighborhoodProfile neighborhood_profile(const Graph& g, Vertex x) {
  NeighborhoodProfile p;
  for (int d : bfs_distances(g, x)) {
    if (d == kUnreachable) continue;
    if (static_cast<std::size_t>(d) >= p.layer.size()) p.layer.resize(d + 1, 0);
    ++p.layer[d];
  }
  std::size_t acc = 0;
  for (auto c : p.layer) p.cumulative.push_back(acc += c);
  return p;
}

bool within_regular_bound(const NeighborhoodProfile& p, int degree) {
  double cap = degree;
  for (std::size_t r = 1; r < p.layer.size(); ++r, cap *= degree - 1)
    if (static_cast<double>(p.layer[r]) > cap) return false;
  return true;
}

bool within_er_bound(const NeighborhoodProfile& p, double lambda, std::size_t n) {
  const double ln_n = std::log(static_cast<double>(n));
  for (std::size_t r = 1; r < p.layer.size(); ++r) {
    const double cap = static_cast<double>((r + 1) * (r + 1)) * std::pow(lambda, static_cast<double>(r)) * ln_n;
    if (static_cast<double>(p.layer[r]) > cap) return false;
  }
  return true;
}

ColorsMargin verify_colors_bound(const ColoredBipartite& inst) {
  if (inst.edges.empty()) throw std::invalid_argument("colored instance has no edges");
  std::vector<std::vector<std::uint32_t>> at_u(inst.left), at_v(inst.right);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::unordered_map<std::uint32_t, std::uint64_t> classes;
  for (const auto& e : inst.edges) {
    if (e.u >= inst.left || e.v >= inst.right) throw std::invalid_argument("colored edge endpoint out of range");
    seen.emplace_back(e.u, e.v);
    at_u[e.u].push_back(e.color);
    at_v[e.v].push_back(e.color);
    ++classes[e.color];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("colored instance repeats an edge");
  }
  auto distinct = [](std::vector<std::uint32_t>& c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::uint64_t>(std::unique(c.begin(), c.end()) - c.begin());
  };
  ColorsMargin out;
  out.edge_count = inst.edges.size();
  for (auto& c : at_u) out.left_colors += distinct(c);
  for (auto& c : at_v) out.right_colors += distinct(c);
  for (const auto& [c, k] : classes) out.largest_class = std::max(out.largest_class, k);
  const auto lhs = static_cast<unsigned __int128>(out.largest_class) * out.left_colors * out.right_colors;
  const auto rhs = static_cast<unsigned __int128>(out.edge_count) * out.edge_count;
  out.sign = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  out.margin = static_cast<double>(out.largest_class) -
               static_cast<double>(out.edge_count) * static_cast<double>(out.edge_count) /
                   (static_cast<double>(out.left_colors) * static_cast<double>(out.right_colors));
  if (out.sign == 0) out.margin = 0;
  return out;
}

namespace {

double bisect(auto f, double lo, double hi) {
  const auto [a, b] =
      boost::math::tools::bisect(f, lo, hi, [](double x, double y) { return std::abs(y - x) < 1e-13; });
  return (a + b) / 2;
}

}  // namespace

double solve_conjugate(double lambda) {
  if (!(lambda > 1)) throw std::invalid_argument("the conjugate needs lambda > 1");
  // log form of x e^-x = lambda e^-lambda; increasing on (0, 1)
  const double target = std::log(lambda) - lambda;
  return bisect([target](double x) { return std::log(x) - x - target; }, 1e-300, 1.0);
}

double solve_giant_fraction(double lambda) {
  if (!(lambda > 1)) throw std::invalid_argument("the giant fraction needs lambda > 1");
  auto f = [lambda](double g) { return g + std::expm1(-lambda * g); };
  double lo = (lambda - 1) / (lambda * lambda);
  while (f(lo) >= 0) lo /= 2;
  return bisect(f, lo, 1.0);
}

}  // namespace hypavg
