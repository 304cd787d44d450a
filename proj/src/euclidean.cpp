#include "hypavg/euclidean.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace hypavg {

PointCloud::PointCloud(std::size_t dim, std::vector<std::vector<double>> points)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dim_) throw std::invalid_argument("point dimension does not match the cloud");
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  double s = 0;
  const auto& p = points_[i];
  const auto& q = points_[j];
  for (std::size_t k = 0; k < dim_; ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
  return std::sqrt(s);
}

PointCloud sample_gaussian_cloud(std::size_t count, std::size_t dim, std::uint64_t seed) {
  if (count == 0 || dim == 0) throw std::invalid_argument("count and dim must be at least 1");
  std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
  const double sd = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < count; ++i) {
    Engine rng = make_stream(seed, i);
    std::normal_distribution<double> normal(0.0, sd);
    for (auto& x : pts[i]) x = normal(rng);
  }
  return PointCloud(dim, std::move(pts));
}

void write_csv(std::ostream& out, const PointCloud& cloud) {
  out.precision(17);
  for (std::size_t k = 0; k < cloud.dim(); ++k) out << (k ? "," : "") << 'x' << k;
  out << '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << p[k];
    out << '\n';
  }
}

namespace {

using P2 = std::array<double, 2>;

P2 lerp(const P2& p, const P2& q, double t) { return {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])}; }
double dist(const P2& p, const P2& q) { return std::hypot(p[0] - q[0], p[1] - q[1]); }

double dist_to_segment(const P2& p, const P2& a, const P2& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0) return dist(p, a);
  const double t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
  return dist(p, lerp(a, b, t));
}

double euclid_norm(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

// Interior angle between sides of lengths p and q with opposite side r.
double angle(double p, double q, double r) {
  if (p == 0 || q == 0) return 0;
  return std::acos(std::clamp((p * p + q * q - r * r) / (2 * p * q), -1.0, 1.0));
}

// max over t in [0,1] of f, f unimodal: grid bracket then golden section.
template <class F>
double maximize_1d(F f, double tol) {
  constexpr int kGrid = 64;
  int best = 0;
  double fbest = f(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = f(static_cast<double>(i) / kGrid);
    if (v > fbest) {
      fbest = v;
      best = i;
    }
  }
  double lo = std::max(0, best - 1) / static_cast<double>(kGrid);
  double hi = std::min(kGrid, best + 1) / static_cast<double>(kGrid);
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  return std::max({fbest, fc, fd});
}

}  // namespace

PlaneTriangle plane_triangle(double a, double b, double c) {
  PlaneTriangle t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.B = {c, 0};
  if (c == 0) {
    t.C = {b, 0};
    return t;
  }
  const double x = (b * b + c * c - a * a) / (2 * c);
  t.C = {x, std::sqrt(std::max(0.0, b * b - x * x))};
  return t;
}

PlaneTriangle plane_triangle(std::span<const double> A, std::span<const double> B, std::span<const double> C) {
  return plane_triangle(euclid_norm(B, C), euclid_norm(C, A), euclid_norm(A, B));
}

double euclid_thin(const PlaneTriangle& t) {
  const double s = (t.a + t.b + t.c) / 2;
  const double at_a = 2 * std::max(0.0, s - t.a) * std::sin(angle(t.b, t.c, t.a) / 2);
  const double at_b = 2 * std::max(0.0, s - t.b) * std::sin(angle(t.c, t.a, t.b) / 2);
  const double at_c = 2 * std::max(0.0, s - t.c) * std::sin(angle(t.a, t.b, t.c) / 2);
  return std::max({at_a, at_b, at_c});
}

double euclid_slim(const PlaneTriangle& t, double tol) {
  auto side = [tol](const P2& p, const P2& q, const P2& r) {
    // points of [p,q] against [q,r] and [r,p]
    return maximize_1d(
        [&](double s) {
          const P2 w = lerp(p, q, s);
          return std::min(dist_to_segment(w, q, r), dist_to_segment(w, r, p));
        },
        tol);
  };
  return std::max({side(t.A, t.B, t.C), side(t.B, t.C, t.A), side(t.C, t.A, t.B)});
}

namespace {

// Contact points of the incircle on BC, CA, AB.
std::array<P2, 3> contact_points(const PlaneTriangle& t) {
  const double s = (t.a + t.b + t.c) / 2;
  auto on = [](const P2& p, const P2& q, double len, double off) { return len == 0 ? p : lerp(p, q, off / len); };
  return {on(t.B, t.C, t.a, s - t.b), on(t.C, t.A, t.b, s - t.c), on(t.A, t.B, t.c, s - t.a)};
}

double diam3(const P2& p, const P2& q, const P2& r) { return std::max({dist(p, q), dist(q, r), dist(r, p)}); }

}  // namespace

double euclid_insize(const PlaneTriangle& t) {
  const auto m = contact_points(t);
  return diam3(m[0], m[1], m[2]);
}

namespace {

double dot(const P2& p, const P2& q) { return p[0] * q[0] + p[1] * q[1]; }
P2 minus(const P2& p, const P2& q) { return {p[0] - q[0], p[1] - q[1]}; }

// min over r on [a,b] of max(|r-p|, |r-q|). Both distances are convex along
// the segment and cross at most once, so the minimum sits at an endpoint, a
// clamped projection, or the crossing.
double cover_two(const P2& p, const P2& q, const P2& a, const P2& b) {
  const P2 ab = minus(b, a);
  const double len2 = dot(ab, ab);
  auto at = [&](double t) {
    const P2 r = lerp(a, b, t);
    return std::max(dist(r, p), dist(r, q));
  };
  if (len2 == 0) return at(0);
  auto proj = [&](const P2& x) { return std::clamp(dot(minus(x, a), ab) / len2, 0.0, 1.0); };
  double best = std::min({at(0), at(1), at(proj(p)), at(proj(q))});
  const double den = 2 * dot(ab, minus(q, p));
  if (den != 0) {
    const P2 ap = minus(a, p), aq = minus(a, q);
    best = std::min(best, at(std::clamp((dot(aq, aq) - dot(ap, ap)) / den, 0.0, 1.0)));
  }
  return best;
}

template <class F>
double minimize_convex(F f, double tol) {
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double lo = 0, hi = 1;
  double c = hi - invphi * (hi - lo), d = lo + invphi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(d);
    }
  }
  return std::min({fc, fd, f(0.0), f(1.0)});
}

}  // namespace

double euclid_minsize(const PlaneTriangle& t, double tol) {
  // diam3 is jointly convex in the three side parameters; minimizing out the
  // last one in closed form keeps convexity, so nested golden sections apply.
  auto g = [&](double u, double v) {
    const P2 p = lerp(t.B, t.C, u), q = lerp(t.C, t.A, v);
    return std::max(dist(p, q), cover_two(p, q, t.A, t.B));
  };
  const double best = minimize_convex([&](double u) { return minimize_convex([&](double v) { return g(u, v); }, tol); }, tol);
  return std::min(best, euclid_insize(t));
}

EuclidTriangleReport euclid_measure_all(const PlaneTriangle& t) {
  EuclidTriangleReport r;
  r.a = t.a;
  r.b = t.b;
  r.c = t.c;
  r.slim = euclid_slim(t);
  r.thin = euclid_thin(t);
  r.insize = euclid_insize(t);
  r.minsize = euclid_minsize(t);
  return r;
}

AvgReport estimate_cloud_triangles(const PointCloud& cloud, std::size_t samples, std::uint64_t seed,
                                   int threads) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  const auto t0 = std::chrono::steady_clock::now();
  const auto n = static_cast<std::int64_t>(samples);
  std::vector<double> slim(samples), thin(samples), minsize(samples), insize(samples);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(threads))
  for (std::int64_t i = 0; i < n; ++i) {
    Engine rng = make_stream(seed, static_cast<std::size_t>(i));
    std::uniform_int_distribution<std::size_t> pick(0, cloud.size() - 1);
    const auto x = pick(rng), y = pick(rng), z = pick(rng);
    if (x == y || y == z || z == x) continue;  // vectors are zero-initialized
    const auto r = euclid_measure_all(plane_triangle(cloud.point(x), cloud.point(y), cloud.point(z)));
    slim[i] = r.slim;
    thin[i] = r.thin;
    minsize[i] = r.minsize;
    insize[i] = r.insize;
  }
  AvgReport rep;
  rep.diameter = cloud.diameter();
  rep.slim = summarize(slim, rep.diameter, seed);
  rep.thin = summarize(thin, rep.diameter, seed);
  rep.minsize = summarize(minsize, rep.diameter, seed);
  rep.insize = summarize(insize, rep.diameter, seed);
  rep.triangle_samples = samples;
  rep.seed = seed;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace hypavg
