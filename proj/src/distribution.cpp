#include "hypavg/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hypavg/parallel.hpp"

namespace hypavg {

VertexDistribution::VertexDistribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("vertex distribution over zero vertices");
  double total = 0;
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    const double w = weights_[v];
    if (!std::isfinite(w) || w < 0) {
      throw std::invalid_argument("vertex weight " + std::to_string(v) + " is negative or not finite");
    }
    if (w > 0) support_.push_back(static_cast<Vertex>(v));
    total += w;
  }
  if (support_.empty()) throw std::invalid_argument("all vertex weights are zero");
  total_ = total;
  uniform_ = std::all_of(weights_.begin(), weights_.end(), [&](double w) { return w == weights_[0]; });
  cumulative_.reserve(support_.size());
  double acc = 0;
  for (Vertex v : support_) {
    acc += weights_[v];
    cumulative_.push_back(acc);
  }
}

VertexDistribution VertexDistribution::uniform(std::size_t n) {
  return VertexDistribution(std::vector<double>(n, 1.0));
}

Vertex VertexDistribution::sample(Engine& rng) const {
  if (uniform_) {
    std::uniform_int_distribution<std::size_t> pick(0, weights_.size() - 1);
    return static_cast<Vertex>(pick(rng));
  }
  std::uniform_real_distribution<double> u(0.0, total_);
  const double r = u(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

VertexDistribution atom_distribution(std::span<const double> weights) {
  return VertexDistribution(std::vector<double>(weights.begin(), weights.end()));
}

}  // namespace hypavg
