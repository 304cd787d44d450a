#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hypavg/distribution.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/metric.hpp"
#include "hypavg/triangle_measures.hpp"

namespace hypavg {

/// Monte Carlo mean with a normal 95% interval and a Hoeffding 99%
/// half-width from the a-priori range [0, bound].
struct Estimate {
  double mean = 0;
  double std_error = 0;
  double ci95_lo = 0;
  double ci95_hi = 0;
  double hoeffding99 = 0;
  double bound = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool exact = false;
};

/// Summary of per-sample values, reduced in a fixed order.
Estimate summarize(std::span<const double> values, double bound, std::uint64_t seed);

struct AvgReport {
  std::optional<Estimate> fp;
  std::optional<Estimate> slim, thin, minsize, insize;
  std::size_t fp_samples = 0;
  std::size_t triangle_samples = 0;
  std::uint64_t seed = 0;
  double diameter = 0;
  double wall_time_ms = 0;
  bool exact = false;
};

struct EstimatorOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
  // Draw tuples of pairwise distinct vertices. Not the i.i.d. scheme the
  // averages are defined by; off by default.
  bool distinct = false;
};

/// Mean four-point value over i.i.d. quadruples.
Estimate estimate_avg_fp(const FiniteMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts);

/// Slim, thin, minsize and insize over the same sampled triangles: corners
/// i.i.d. from dist, one uniform geodesic per side.
AvgReport estimate_avg_triangles(const GraphMetric& m, const VertexDistribution& dist,
                                 const EstimatorOptions& opts);

/// Both of the above; the triangle stream is derived from opts.seed.
AvgReport estimate_avg(const GraphMetric& m, const VertexDistribution& dist, std::size_t fp_samples,
                       std::size_t triangle_samples, std::uint64_t seed, int threads = 0);

/// Master seed of the triangle streams for a given run seed.
std::uint64_t triangle_seed(std::uint64_t seed);

/// Throws PreconditionError unless the support lies in one component.
void require_connected_support(const FiniteMetric& m, const VertexDistribution& dist);

// Per-sample kernels shared with the serial reference.
double fp_sample(const FiniteMetric& m, const GraphMetric* graph, const VertexDistribution& dist,
                 std::uint64_t seed, std::size_t index, bool distinct);
TriangleReport triangle_sample(const GraphMetric& m, const VertexDistribution& dist, std::uint64_t seed,
                               std::size_t index, bool distinct);

}  // namespace hypavg
