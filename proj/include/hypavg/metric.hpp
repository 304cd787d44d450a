#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hypavg/graph.hpp"
#include "hypavg/half_int.hpp"

namespace hypavg {

/// A finite metric space on points 0..size()-1. Graph metrics report hop
/// counts; point clouds report Euclidean distances.
class FiniteMetric {
 public:
  virtual ~FiniteMetric() = default;
  virtual std::size_t size() const = 0;
  /// +infinity for points in different components.
  virtual double distance(std::size_t i, std::size_t j) const = 0;
  /// Largest finite pairwise distance. The default is an O(n^2) scan.
  virtual double diameter() const;
};

inline constexpr int kUnreachable = -1;

/// Dense all-pairs hop distances. Entries are 16-bit; the sentinel marks
/// pairs in different components.
class DistanceMatrix final : public FiniteMetric {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const override { return n_; }
  double distance(std::size_t i, std::size_t j) const override;
  double diameter() const override;

  /// Hop distance, or kUnreachable.
  int hops(Vertex u, Vertex v) const {
    const auto d = data_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    return d == kSentinel ? kUnreachable : d;
  }
  bool connected() const;

  std::span<std::uint16_t> row(Vertex u) { return {data_.data() + static_cast<std::size_t>(u) * n_, n_}; }
  std::span<const std::uint16_t> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
  }

  static constexpr std::uint16_t kSentinel = std::numeric_limits<std::uint16_t>::max();

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> data_;
};

struct ApspOptions {
  std::size_t max_vertices = 20000;  // O(n^2) memory cap
  int threads = 0;                   // 0: HYPAVG_THREADS / OpenMP default
};

/// BFS from every source, parallel over sources. Throws CapacityError above
/// the vertex cap.
DistanceMatrix apsp(const Graph& g, const ApspOptions& options = {});

/// Hop distances from one source; kUnreachable where not reached.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Exact Gromov product <x,y>_w on a graph metric.
HalfInt gromov_product(const DistanceMatrix& d, Vertex x, Vertex y, Vertex w);
double gromov_product(const FiniteMetric& m, std::size_t x, std::size_t y, std::size_t w);

struct FpBreakdown {
  double P = 0, Q = 0, R = 0;
  double fp = 0;
};

/// Four-point value 1/2 (max - median) of P = d(x,y)+d(z,w),
/// Q = d(x,z)+d(y,w), R = d(x,w)+d(y,z). Throws PreconditionError when the
/// points are not in one component.
FpBreakdown four_point(const FiniteMetric& m, std::size_t x, std::size_t y, std::size_t z,
                       std::size_t w);

/// Twice the four-point value from integer distances (no component check).
inline std::int64_t four_point_twice(int dxy, int dzw, int dxz, int dyw, int dxw, int dyz) {
  int p = dxy + dzw, q = dxz + dyw, r = dxw + dyz;
  // sort p >= q >= r
  if (p < q) std::swap(p, q);
  if (q < r) std::swap(q, r);
  if (p < q) std::swap(p, q);
  return p - q;
}

HalfInt four_point_exact(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z, Vertex w);

struct HypResult {
  double value = 0;
  std::array<std::size_t, 4> witness{};
};

struct HypOptions {
  int threads = 0;
};

/// Maximum four-point value over all unordered quadruples, O(n^4).
/// Throws PreconditionError on disconnected input.
HypResult hyp_exact(const FiniteMetric& m, const HypOptions& options = {});
HypResult hyp_exact(const DistanceMatrix& d, const HypOptions& options = {});

/// Largest pairwise distance; throws PreconditionError when disconnected.
int diameter(const DistanceMatrix& d);

}  // namespace hypavg
