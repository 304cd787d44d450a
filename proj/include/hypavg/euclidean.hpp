#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypavg/estimators.hpp"
#include "hypavg/metric.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

/// Points in R^dim with the Euclidean metric.
class PointCloud final : public FiniteMetric {
 public:
  PointCloud(std::size_t dim, std::vector<std::vector<double>> points);

  std::size_t size() const override { return points_.size(); }
  double distance(std::size_t i, std::size_t j) const override;
  std::size_t dim() const { return dim_; }
  std::span<const double> point(std::size_t i) const { return points_[i]; }

 private:
  std::size_t dim_;
  std::vector<std::vector<double>> points_;
};

/// count i.i.d. points with independent N(0, 1/dim) coordinates, so that
/// E|x - y|^2 = 2. Point i uses stream i of the seed.
PointCloud sample_gaussian_cloud(std::size_t count, std::size_t dim, std::uint64_t seed);

void write_csv(std::ostream& out, const PointCloud& cloud);

/// A triangle placed in the plane from its side lengths: A at the origin,
/// B on the positive x-axis, C in the upper half plane.
struct PlaneTriangle {
  std::array<double, 2> A{}, B{}, C{};
  double a = 0, b = 0, c = 0;  // |BC|, |CA|, |AB|
};

PlaneTriangle plane_triangle(double a, double b, double c);
PlaneTriangle plane_triangle(std::span<const double> A, std::span<const double> B, std::span<const double> C);

struct EuclidTriangleReport {
  double slim = 0, thin = 0, minsize = 0, insize = 0;
  double a = 0, b = 0, c = 0;
};

constexpr double kDefaultTol = 1e-9;

double euclid_thin(const PlaneTriangle& t);
double euclid_slim(const PlaneTriangle& t, double tol = kDefaultTol);
double euclid_insize(const PlaneTriangle& t);
double euclid_minsize(const PlaneTriangle& t, double tol = 1e-9);

EuclidTriangleReport euclid_measure_all(const PlaneTriangle& t);

/// Triangle measures over i.i.d. uniform corner triples of the cloud.
AvgReport estimate_cloud_triangles(const PointCloud& cloud, std::size_t samples, std::uint64_t seed,
                                   int threads = 0);

}  // namespace hypavg
