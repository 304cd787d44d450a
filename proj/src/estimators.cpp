#include "hypavg/estimators.hpp"

#include <omp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <vector>

#include "hypavg/error.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

Estimate summarize(std::span<const double> values, double bound, std::uint64_t seed) {
  Estimate e;
  e.samples = values.size();
  e.seed = seed;
  e.bound = bound;
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  e.mean = pairwise_sum(values) / n;
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - e.mean) * (values[i] - e.mean);
    e.std_error = std::sqrt(pairwise_sum(sq) / (n - 1) / n);
  }
  constexpr double z95 = 1.959963984540054;
  e.ci95_lo = e.mean - z95 * e.std_error;
  e.ci95_hi = e.mean + z95 * e.std_error;
  e.hoeffding99 = bound * std::sqrt(std::log(2.0 / 0.01) / (2.0 * n));
  return e;
}

std::uint64_t triangle_seed(std::uint64_t seed) { return stream_seed(seed, ~std::uint64_t{0}); }

void require_connected_support(const FiniteMetric& m, const VertexDistribution& dist) {
  if (dist.vertex_count() != m.size()) {
    throw PreconditionError("distribution has " + std::to_string(dist.vertex_count()) + " weights for " +
                            std::to_string(m.size()) + " points");
  }
  const auto& s = dist.support();
  for (Vertex v : s) {
    if (!std::isfinite(m.distance(s.front(), v))) {
      throw PreconditionError("distribution support spans more than one component");
    }
  }
}

namespace {

template <std::size_t K>
std::array<Vertex, K> draw(const VertexDistribution& dist, Engine& rng, bool distinct) {
  std::array<Vertex, K> out{};
  for (std::size_t i = 0; i < K; ++i) {
    for (;;) {
      out[i] = dist.sample(rng);
      bool fresh = true;
      for (std::size_t j = 0; distinct && j < i; ++j) fresh = fresh && out[j] != out[i];
      if (fresh) break;
    }
  }
  return out;
}

void check_distinct(const VertexDistribution& dist, std::size_t k, bool distinct) {
  if (distinct && dist.support().size() < k) {
    throw PreconditionError("distinct sampling needs a support of at least " + std::to_string(k) + " vertices");
  }
}

}  // namespace

double fp_sample(const FiniteMetric& m, const GraphMetric* graph, const VertexDistribution& dist,
                 std::uint64_t seed, std::size_t index, bool distinct) {
  Engine rng = make_stream(seed, index);
  const auto [x, y, z, w] = draw<4>(dist, rng, distinct);
  if (graph) {
    const auto& g = *graph;
    return 0.5 * static_cast<double>(four_point_twice(g.hops(x, y), g.hops(z, w), g.hops(x, z), g.hops(y, w),
                                                      g.hops(x, w), g.hops(y, z)));
  }
  return four_point(m, x, y, z, w).fp;
}

TriangleReport triangle_sample(const GraphMetric& m, const VertexDistribution& dist, std::uint64_t seed,
                               std::size_t index, bool distinct) {
  Engine rng = make_stream(seed, index);
  const auto [x, y, z] = draw<3>(dist, rng, distinct);
  return measure_all(m, sample_triangle(m, x, y, z, rng));
}

Estimate estimate_avg_fp(const FiniteMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts) {
  if (opts.samples == 0) throw std::invalid_argument("samples must be at least 1");
  require_connected_support(m, dist);
  check_distinct(dist, 4, opts.distinct);
  const auto* graph = dynamic_cast<const GraphMetric*>(&m);
  const auto n = static_cast<std::int64_t>(opts.samples);
  std::vector<double> values(opts.samples);
#pragma omp parallel for schedule(static) num_threads(thread_count(opts.threads))
  for (std::int64_t i = 0; i < n; ++i) {
    values[i] = fp_sample(m, graph, dist, opts.seed, static_cast<std::size_t>(i), opts.distinct);
  }
  return summarize(values, 0.5 * m.diameter(), opts.seed);
}

AvgReport estimate_avg_triangles(const GraphMetric& m, const VertexDistribution& dist,
                                 const EstimatorOptions& opts) {
  if (opts.samples == 0) throw std::invalid_argument("samples must be at least 1");
  require_connected_support(m, dist);
  check_distinct(dist, 3, opts.distinct);
  const auto t0 = std::chrono::steady_clock::now();
  const auto n = static_cast<std::int64_t>(opts.samples);
  std::vector<double> slim(opts.samples), thin(opts.samples), minsize(opts.samples), insize(opts.samples);
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count(opts.threads))
  for (std::int64_t i = 0; i < n; ++i) {
    const auto r = triangle_sample(m, dist, opts.seed, static_cast<std::size_t>(i), opts.distinct);
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

AvgReport estimate_avg(const GraphMetric& m, const VertexDistribution& dist, std::size_t fp_samples,
                       std::size_t triangle_samples, std::uint64_t seed, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  AvgReport rep;
  if (triangle_samples > 0) {
    rep = estimate_avg_triangles(m, dist, {triangle_samples, triangle_seed(seed), threads, false});
  }
  if (fp_samples > 0) {
    rep.fp = estimate_avg_fp(m, dist, {fp_samples, seed, threads, false});
    rep.fp_samples = fp_samples;
  }
  rep.seed = seed;
  rep.diameter = m.diameter();
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hypavg
