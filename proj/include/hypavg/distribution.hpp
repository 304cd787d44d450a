#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypavg/graph.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

/// Sampling distribution over vertices 0..n-1 given by nonnegative weights.
/// Raw weights are kept so exact oracles can normalize them in rational
/// arithmetic.
class VertexDistribution {
 public:
  /// Throws std::invalid_argument on negative/non-finite or all-zero weights.
  explicit VertexDistribution(std::vector<double> weights);

  static VertexDistribution uniform(std::size_t n);

  std::size_t vertex_count() const { return weights_.size(); }
  const std::vector<Vertex>& support() const { return support_; }
  const std::vector<double>& raw_weights() const { return weights_; }
  double probability(Vertex v) const { return weights_[v] / total_; }
  bool is_uniform() const { return uniform_; }

  /// O(log |support|) draw; O(1) when all weights are equal.
  Vertex sample(Engine& rng) const;

 private:
  std::vector<double> weights_;
  std::vector<Vertex> support_;
  std::vector<double> cumulative_;  // over support_
  double total_ = 0;
  bool uniform_ = false;
};

/// Distribution concentrated on the vertices with positive weight.
VertexDistribution atom_distribution(std::span<const double> weights);

}  // namespace hypavg
