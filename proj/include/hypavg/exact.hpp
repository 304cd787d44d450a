#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>

#include "hypavg/distribution.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/graph.hpp"
#include "hypavg/graph_metric.hpp"

namespace hypavg {

using Rational = boost::multiprecision::cpp_rational;

struct ExactOptions {
  std::uint64_t fp_term_cap = 100'000'000;        // |support|^4
  std::uint64_t geodesic_cap = 10'000;            // sigma per pair
  std::uint64_t triangle_term_cap = 100'000'000;  // sum over triples of sigma products
};

struct ExactAverages {
  std::optional<Rational> fp;
  std::optional<Rational> slim, thin, minsize, insize;
};

/// Vertex weights normalized to sum 1, exactly.
std::vector<Rational> exact_weights(const VertexDistribution& dist);

/// Sum over ordered quadruples of the weight product times fp.
/// Throws CapacityError when |support|^4 exceeds the cap.
Rational exact_avg_fp(const GraphMetric& m, const VertexDistribution& dist, const ExactOptions& opts = {});

/// Expectation over i.i.d. corners and uniform geodesic choices, by full
/// enumeration. Throws CapacityError naming a pair whose sigma exceeds the
/// geodesic cap, or when the enumeration budget is exceeded.
ExactAverages exact_avg_triangles(const Graph& g, const GraphMetric& m, const VertexDistribution& dist,
                                  const ExactOptions& opts = {});

/// Exact values rendered as estimates with zero error.
AvgReport to_report(const ExactAverages& exact, double diameter);

}  // namespace hypavg
