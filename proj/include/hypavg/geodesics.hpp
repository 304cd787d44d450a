#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hypavg/graph.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/half_int.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

using PathCount = boost::multiprecision::cpp_int;

/// Shortest-path DAG from a source with exact path counts sigma.
///
/// Built either over the whole component of the source (build_dag) or over
/// the interval I(s,t) = {v : d(s,v) + d(v,t) = d(s,t)} of one pair
/// (build_pair_dag). Every geodesic from s to a vertex of I(s,t) stays in
/// I(s,t), so counts on the interval are exact. Counts are held in 64 bits
/// until the first overflow, then in arbitrary precision.
class GeodesicDag {
 public:
  Vertex source() const { return source_; }
  bool contains(Vertex v) const { return local(v) >= 0; }
  /// Hop distance from the source, kUnreachable when not in the DAG.
  int distance(Vertex v) const;
  /// Predecessors of v: neighbors one step closer to the source.
  std::vector<Vertex> predecessors(Vertex v) const;
  PathCount path_count(Vertex v) const;
  std::size_t vertex_count() const { return vertices_.size(); }
  bool counts_fit_64() const { return wide_.empty(); }

 private:
  friend class DagBuilder;
  friend struct DagAccess;

  std::int32_t local(Vertex v) const;

  Vertex source_ = 0;
  std::vector<Vertex> vertices_;       // local id -> vertex, in BFS order
  std::vector<std::int32_t> level_;    // local id -> distance from source
  std::vector<std::size_t> pred_off_;  // CSR over local ids
  std::vector<std::int32_t> preds_;    // local ids
  std::vector<std::uint64_t> narrow_;  // counts while they fit
  std::vector<PathCount> wide_;        // counts after any overflow
  std::vector<std::int32_t> dense_;    // vertex -> local id (whole-component DAGs)
  std::unordered_map<Vertex, std::int32_t> sparse_;  // vertex -> local id (pair DAGs)
};

GeodesicDag build_dag(const Graph& g, Vertex source);
GeodesicDag build_pair_dag(const Graph& g, const GraphMetric& m, Vertex source, Vertex target);
GeodesicDag build_pair_dag(const Graph& g, const DistanceMatrix& d, Vertex source, Vertex target);

/// Shortest path v_0 = from, ..., v_L = to.
struct GeodesicSegment {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  GeodesicSegment reversed() const;
};

/// Consecutive vertices adjacent and d(from, v_i) = i for every i.
bool is_valid_segment(const Graph& g, const GraphMetric& m, const GeodesicSegment& s);

/// Uniform over the sigma(target) geodesics: walks back from the target and
/// picks predecessor u with probability sigma(u) / sigma(current), drawing
/// an exact uniform integer below sigma(current).
/// Throws PreconditionError when the target is not in the DAG.
GeodesicSegment sample_geodesic(const GeodesicDag& dag, Vertex target, Engine& rng);

/// All geodesics to target. Throws CapacityError when sigma exceeds cap.
std::vector<GeodesicSegment> enumerate_geodesics(const GeodesicDag& dag, Vertex target,
                                                 std::uint64_t cap);

/// Uniform integer in [0, bound) for bound >= 1.
PathCount uniform_below(const PathCount& bound, Engine& rng);

/// Sides [x,y], [y,z], [z,x], each oriented from its first corner.
struct GeodesicTriangle {
  Vertex x = 0, y = 0, z = 0;
  GeodesicSegment xy, yz, zx;
  bool degenerate = false;  // corners not pairwise distinct
};

GeodesicTriangle make_triangle(GeodesicSegment xy, GeodesicSegment yz, GeodesicSegment zx);

/// One uniform geodesic from a to b: unique tree paths joined through a
/// pair DAG over the core.
GeodesicSegment sample_side(const GraphMetric& m, Vertex a, Vertex b, Engine& rng);

/// One independent uniform geodesic per side. Degenerate triangles are
/// returned with the flag set. Throws PreconditionError across components.
/// The graph is the one `m` was built from.
GeodesicTriangle sample_triangle(const GraphMetric& m, Vertex x, Vertex y, Vertex z, Engine& rng);

/// A point of the metric realization lying on a segment: a vertex at an
/// integer offset, or the midpoint of an edge at a half offset.
struct SegmentPoint {
  std::span<const Vertex> path;
  HalfInt offset;

  bool at_vertex() const { return offset.is_integer(); }
  Vertex vertex() const { return path[static_cast<std::size_t>(offset.floor())]; }
  /// Endpoints of the edge holding a half-offset point.
  Edge edge() const {
    const auto i = static_cast<std::size_t>(offset.floor());
    return {path[i], path[i + 1]};
  }
};

struct InternalPoints {
  SegmentPoint m_yz, m_zx, m_xy;
};

/// m_yz sits on [y,z] at offset <x,z>_y from y, so that
/// d(x,y) - d(y,m_yz) = d(x,z) - d(z,m_yz); cyclically for the others.
/// Throws PreconditionError on degenerate triangles.
InternalPoints locate_internal_points(const GraphMetric& m, const GeodesicTriangle& tri);

/// Distance in the metric realization where each edge is a unit segment.
HalfInt point_distance(const GraphMetric& m, const SegmentPoint& p, const SegmentPoint& q);

}  // namespace hypavg
