#pragma once

// Slow, serial, direct-from-definition implementations. Used as test
// oracles and as the baseline in the benchmark.

#include <cstdint>
#include <vector>

#include "hypavg/distribution.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/geodesics.hpp"
#include "hypavg/graph.hpp"

namespace hypavg::ref {

using Dist = std::vector<std::vector<int>>;  // -1 when unreachable

/// Floyd-Warshall.
Dist apsp(const Graph& g);

/// Twice the maximum four-point value over all ordered quadruples.
std::int64_t hyp_twice(const Dist& d);

/// Every shortest path from a to b, by depth-first extension.
std::vector<std::vector<Vertex>> all_geodesics(const Graph& g, const Dist& d, Vertex a, Vertex b);

struct Measures {
  int slim = 0, thin = 0, minsize = 0;
  std::int64_t insize_twice = 0;
};

/// Triangle given by its three vertex sequences x->y, y->z, z->x.
Measures measure(const Dist& d, const std::vector<Vertex>& xy, const std::vector<Vertex>& yz,
                 const std::vector<Vertex>& zx);
int slim(const Dist& d, const std::vector<Vertex>& xy, const std::vector<Vertex>& yz, const std::vector<Vertex>& zx);
int minsize(const Dist& d, const std::vector<Vertex>& xy, const std::vector<Vertex>& yz,
            const std::vector<Vertex>& zx);

struct WorstCase {
  std::int64_t hyp_twice = 0;
  Measures max;
};

WorstCase worst_case(const Graph& g);

/// Ordered quadruples, weights w (need not be normalized).
Rational avg_fp(const Dist& d, const std::vector<Rational>& w);

struct Averages {
  Rational slim, thin, minsize, insize;
};

/// Ordered triples times every geodesic choice, weights w.
Averages avg_triangles(const Graph& g, const Dist& d, const std::vector<Rational>& w);

// Single-threaded estimators over the same per-sample kernels and streams
// as the parallel ones.
Estimate serial_avg_fp(const FiniteMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts);
AvgReport serial_avg_triangles(const GraphMetric& m, const VertexDistribution& dist, const EstimatorOptions& opts);

}  // namespace hypavg::ref
