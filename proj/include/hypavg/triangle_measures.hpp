#pragma once

#include "hypavg/geodesics.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/half_int.hpp"

namespace hypavg {

/// Measures of one geodesic triangle. Degenerate triangles report zeros.
struct TriangleReport {
  int slim = 0;
  int thin = 0;
  int minsize = 0;
  HalfInt insize;
  bool degenerate = false;

  bool operator==(const TriangleReport&) const = default;
};

/// Max over sides and vertices w on a side of the distance from w to the
/// vertex set of the other two sides.
int slim(const GraphMetric& m, const GeodesicTriangle& tri);

/// Max over corners x and offsets r <= floor(<y,z>_x) of the distance
/// between the offset-r vertices of the two sides leaving x.
int thin(const GraphMetric& m, const GeodesicTriangle& tri);

/// Min over one vertex per side of the diameter of the three vertices.
int minsize(const GraphMetric& m, const GeodesicTriangle& tri);

/// Diameter of the internal points in the metric realization.
HalfInt insize(const GraphMetric& m, const GeodesicTriangle& tri);
HalfInt insize(const GraphMetric& m, const InternalPoints& pts);

TriangleReport measure_all(const GraphMetric& m, const GeodesicTriangle& tri);

}  // namespace hypavg
