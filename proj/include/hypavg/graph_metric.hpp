#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypavg/graph.hpp"
#include "hypavg/metric.hpp"

namespace hypavg {

/// Exact hop metric of a graph with pendant trees factored out.
///
/// Repeatedly stripping degree-1 vertices leaves the 2-core; every stripped
/// vertex hangs in a tree attached to exactly one core vertex (its root).
/// Shortest paths between core vertices stay in the core, so
///
///   d(u, v) = depth(u) + depth(v) + d_core(root(u), root(v))   roots differ
///   d(u, v) = tree distance via the lowest common ancestor    same root
///
/// Only the core gets a dense matrix, so the memory cap applies to the core
/// size. Graphs without pendant vertices pay one extra indirection per query.
/// A component that is itself a tree keeps one vertex as its core.
class GraphMetric final : public FiniteMetric {
 public:
  GraphMetric() = default;
  explicit GraphMetric(const Graph& g, const ApspOptions& options = {});

  std::size_t size() const override { return slot_.size(); }
  double distance(std::size_t i, std::size_t j) const override;
  double diameter() const override { return diameter_; }

  int hops(Vertex u, Vertex v) const {
    if (u == v) return 0;
    const auto su = slot_[u], sv = slot_[v];
    if (su != sv) {
      const int c = core_.hops(su, sv);
      return c == kUnreachable ? kUnreachable : depth_[u] + depth_[v] + c;
    }
    return tree_hops(u, v);
  }

  bool connected() const { return connected_; }
  std::size_t core_size() const { return core_.size(); }
  const DistanceMatrix& core_distances() const { return core_; }
  int depth(Vertex v) const { return depth_[v]; }

  /// Core index of the root of v's pendant tree (v's own index on the core).
  std::int32_t slot(Vertex v) const { return slot_[v]; }
  Vertex core_vertex(std::int32_t slot) const { return core_vertices_[slot]; }
  Vertex root(Vertex v) const { return core_vertices_[slot_[v]]; }
  /// Next vertex towards the root; only meaningful when depth(v) > 0.
  Vertex parent(Vertex v) const { return up_[0][v]; }
  /// Subgraph induced by the core, on core indices.
  const Graph& core_graph() const { return core_graph_; }

 private:
  int tree_hops(Vertex u, Vertex v) const;
  void compute_diameter(const Graph& g, const std::vector<Vertex>& order);

  std::vector<Vertex> slot_;             // core index of the root of each vertex
  std::vector<std::int32_t> depth_;      // 0 on the core
  std::vector<std::vector<Vertex>> up_;  // up_[k][v]: 2^k-th ancestor, roots map to themselves
  std::vector<Vertex> core_vertices_;    // core index -> vertex
  Graph core_graph_;
  DistanceMatrix core_;
  double diameter_ = 0;
  bool connected_ = true;
};

}  // namespace hypavg
