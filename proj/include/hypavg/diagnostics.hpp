#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypavg/geodesics.hpp"
#include "hypavg/graph.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/half_int.hpp"
#include "hypavg/metric.hpp"

namespace hypavg {

/// Suprema over all triples and quadruples and all geodesic choices.
struct WorstCase {
  HalfInt hyp;
  int slim = 0, thin = 0, minsize = 0;
  HalfInt insize;
  std::array<Vertex, 4> hyp_witness{};
};

/// Exhaustive; throws CapacityError when a pair has more than
/// geodesic_cap geodesics, PreconditionError when g is disconnected.
WorstCase worst_case_measures(const Graph& g, std::uint64_t geodesic_cap = 10'000);

/// #{(x, y) ordered : d(x, w) + d(w, y) = d(x, y)}.
std::uint64_t traffic(const DistanceMatrix& d, Vertex w);
std::vector<std::uint64_t> traffic_all(const DistanceMatrix& d, int threads = 0);
/// d^2 / (d-2)^2 * (d-1)^D for degree d >= 3 and diameter D.
double traffic_bound(int degree, int diameter);

struct DsplStats {
  double mean = 0;
  double variance = 0;  // unbiased
  std::size_t pairs = 0;
  bool all_pairs = false;
};

/// Distance between uniform ordered pairs of distinct vertices; every such
/// pair when pair_samples is 0.
DsplStats dspl_stats(const GraphMetric& m, std::size_t pair_samples, std::uint64_t seed);
/// pi^2 / (6 ln^2 (d-1)) + 1/12.
double dspl_predicted_variance(int degree);

struct NeighborhoodProfile {
  std::vector<std::size_t> layer;       // |Gamma_r(x)|
  std::vector<std::size_t> cumulative;  // |N_r(x)|
};

NeighborhoodProfile neighborhood_profile(const Graph& g, Vertex x);
/// |Gamma_r| <= d (d-1)^(r-1) for r >= 1.
bool within_regular_bound(const NeighborhoodProfile& p, int degree);
/// |Gamma_r| <= (r+1)^2 lambda^r ln n for r >= 1.
bool within_er_bound(const NeighborhoodProfile& p, double lambda, std::size_t n);

struct ColoredEdge {
  std::uint32_t u = 0;  // in U
  std::uint32_t v = 0;  // in V
  std::uint32_t color = 0;
};

struct ColoredBipartite {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::vector<ColoredEdge> edges;
};

struct ColorsMargin {
  std::uint64_t largest_class = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t left_colors = 0;   // sum over U of t(u)
  std::uint64_t right_colors = 0;  // sum over V of t(v)
  double margin = 0;                // largest_class - |E|^2 / (left_colors * right_colors)
  int sign = 0;                     // exact sign of the margin
};

/// t(x) is the number of distinct colours at x. Throws std::invalid_argument
/// on out-of-range endpoints, repeated edges or an empty edge set.
ColorsMargin verify_colors_bound(const ColoredBipartite& inst);

/// lambda_* in (0,1) with lambda_* e^-lambda_* = lambda e^-lambda.
/// Throws std::invalid_argument for lambda <= 1.
double solve_conjugate(double lambda);
/// gamma in (0,1] with gamma = 1 - e^(-lambda gamma).
double solve_giant_fraction(double lambda);

}  // namespace hypavg
