#include "hypavg/exact.hpp"

#include <string>
#include <vector>

#include "hypavg/error.hpp"
#include "hypavg/geodesics.hpp"
#include "hypavg/triangle_measures.hpp"

namespace hypavg {

using boost::multiprecision::cpp_int;

std::vector<Rational> exact_weights(const VertexDistribution& dist) {
  std::vector<Rational> w(dist.vertex_count());
  Rational total = 0;
  for (std::size_t v = 0; v < w.size(); ++v) {
    w[v] = Rational(dist.raw_weights()[v]);  // doubles are dyadic, so this is exact
    total += w[v];
  }
  for (auto& x : w) x /= total;
  return w;
}

Rational exact_avg_fp(const GraphMetric& m, const VertexDistribution& dist, const ExactOptions& opts) {
  require_connected_support(m, dist);
  const auto& s = dist.support();
  const auto k = s.size();
  const double terms = static_cast<double>(k) * k * k * k;
  if (terms > static_cast<double>(opts.fp_term_cap)) {
    throw CapacityError("exact four-point average needs " + std::to_string(k) + "^4 terms, above the cap of " +
                        std::to_string(opts.fp_term_cap));
  }
  // fp vanishes on tuples with a repeat and is symmetric, so the ordered sum
  // is 24 times the sum over 4-subsets.
  auto twice = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return four_point_twice(m.hops(s[a], s[b]), m.hops(s[c], s[d]), m.hops(s[a], s[c]), m.hops(s[b], s[d]),
                            m.hops(s[a], s[d]), m.hops(s[b], s[c]));
  };
  const auto n = static_cast<std::int64_t>(k);
  if (dist.is_uniform()) {
    std::int64_t sum = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : sum)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = a + 1; b < n; ++b)
        for (std::int64_t c = b + 1; c < n; ++c)
          for (std::int64_t d = c + 1; d < n; ++d) sum += twice(a, b, c, d);
    return Rational(cpp_int(sum) * 12, cpp_int(n) * n * n * n);
  }
  const auto w = exact_weights(dist);
  Rational total = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = a + 1; b < n; ++b)
      for (std::int64_t c = b + 1; c < n; ++c) {
        const Rational wabc = w[s[a]] * w[s[b]] * w[s[c]];
        for (std::int64_t d = c + 1; d < n; ++d) {
          const auto t = twice(a, b, c, d);
          if (t) total += wabc * w[s[d]] * t;
        }
      }
  return total * 12;
}

namespace {

struct PairTable {
  std::size_t k = 0;
  std::vector<std::vector<GeodesicSegment>> paths;  // [a * k + b], a < b, oriented a -> b
  const std::vector<GeodesicSegment>& at(std::size_t a, std::size_t b) const { return paths[a * k + b]; }
};

PairTable enumerate_pairs(const Graph& g, const std::vector<Vertex>& s, std::uint64_t cap) {
  PairTable t;
  t.k = s.size();
  t.paths.resize(t.k * t.k);
  for (std::size_t a = 0; a < t.k; ++a) {
    const auto dag = build_dag(g, s[a]);
    for (std::size_t b = a + 1; b < t.k; ++b) {
      try {
        t.paths[a * t.k + b] = enumerate_geodesics(dag, s[b], cap);
      } catch (const CapacityError& e) {
        throw CapacityError(std::string("exact triangle average: ") + e.what());
      }
    }
  }
  return t;
}

}  // namespace

ExactAverages exact_avg_triangles(const Graph& g, const GraphMetric& m, const VertexDistribution& dist,
                                  const ExactOptions& opts) {
  require_connected_support(m, dist);
  const auto& s = dist.support();
  const auto k = s.size();
  const auto table = enumerate_pairs(g, s, opts.geodesic_cap);

  // Budget: all geodesic combinations over all 3-subsets.
  cpp_int combos = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c)
        combos += cpp_int(table.at(a, b).size()) * table.at(b, c).size() * table.at(a, c).size();
  if (combos > opts.triangle_term_cap) {
    throw CapacityError("exact triangle average needs " + combos.str() + " geodesic triangles, above the cap of " +
                        std::to_string(opts.triangle_term_cap));
  }

  const auto w = exact_weights(dist);
  Rational slim = 0, thin = 0, minsize = 0, insize = 0;
  // Measures do not depend on corner order and vanish on repeated corners,
  // so the ordered sum is 6 times the sum over 3-subsets.
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        std::int64_t ss = 0, st = 0, sm = 0, si2 = 0;
        const auto& xy = table.at(a, b);
        const auto& yz = table.at(b, c);
        const auto& ac = table.at(a, c);
        for (const auto& p : xy)
          for (const auto& q : yz)
            for (const auto& r : ac) {
              const auto rep = measure_all(m, make_triangle(p, q, r.reversed()));
              ss += rep.slim;
              st += rep.thin;
              sm += rep.minsize;
              si2 += rep.insize.twice();
            }
        const cpp_int denom = cpp_int(xy.size()) * yz.size() * ac.size();
        const Rational weight = w[s[a]] * w[s[b]] * w[s[c]] * 6 / Rational(denom);
        slim += weight * ss;
        thin += weight * st;
        minsize += weight * sm;
        insize += weight * si2 / 2;
      }
  ExactAverages out;
  out.slim = slim;
  out.thin = thin;
  out.minsize = minsize;
  out.insize = insize;
  return out;
}

AvgReport to_report(const ExactAverages& exact, double diameter) {
  auto as_estimate = [](const std::optional<Rational>& v) -> std::optional<Estimate> {
    if (!v) return std::nullopt;
    Estimate e;
    e.mean = static_cast<double>(*v);
    e.ci95_lo = e.ci95_hi = e.mean;
    e.exact = true;
    return e;
  };
  AvgReport rep;
  rep.fp = as_estimate(exact.fp);
  rep.slim = as_estimate(exact.slim);
  rep.thin = as_estimate(exact.thin);
  rep.minsize = as_estimate(exact.minsize);
  rep.insize = as_estimate(exact.insize);
  rep.diameter = diameter;
  rep.exact = true;
  return rep;
}

}  // namespace hypavg
