#include "hypavg/audit.hpp"

#include <sstream>

#include "hypavg/catalog.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

void AuditReport::record(const std::string& id, bool holds, const std::string& witness) {
  auto& c = checks_[id];
  c.id = id;
  ++c.checked;
  if (!holds) {
    ++failures_[id];
    if (c.violations.size() < kMaxStoredWitnesses) c.violations.push_back(witness);
  }
}

void AuditReport::merge(const AuditReport& other) {
  for (const auto& [id, c] : other.checks_) {
    auto& mine = checks_[id];
    mine.id = id;
    mine.checked += c.checked;
    for (const auto& v : c.violations)
      if (mine.violations.size() < kMaxStoredWitnesses) mine.violations.push_back(v);
  }
  for (const auto& [id, k] : other.failures_) failures_[id] += k;
}

std::uint64_t AuditReport::violation_count() const {
  std::uint64_t n = 0;
  for (const auto& [id, k] : failures_) n += k;
  return n;
}

std::uint64_t AuditReport::failures(const std::string& id) const {
  const auto it = failures_.find(id);
  return it == failures_.end() ? 0 : it->second;
}

namespace {

std::string describe(const TriangleReport& r, const std::string& context) {
  std::ostringstream os;
  os << context << ": slim " << r.slim << " thin " << r.thin << " minsize " << r.minsize << " insize " << r.insize;
  return os.str();
}

}  // namespace

void audit_metric(AuditReport& rep, const DistanceMatrix& d, std::size_t triples, std::uint64_t seed,
                  const std::string& context) {
  const auto n = static_cast<Vertex>(d.size());
  auto check = [&](Vertex x, Vertex y, Vertex z) {
    const int xy = d.hops(x, y), yz = d.hops(y, z), xz = d.hops(x, z);
    if (xy == kUnreachable || yz == kUnreachable || xz == kUnreachable) return;
    const bool ok = xz <= xy + yz;
    if (ok) {
      rep.record("metric.triangle_inequality", true);
      return;
    }
    std::ostringstream os;
    os << context << ": d(" << x << "," << z << ") = " << xz << " > d(" << x << "," << y << ") + d(" << y << ","
       << z << ") = " << xy + yz;
    rep.record("metric.triangle_inequality", false, os.str());
  };
  for (Vertex x = 0; x < n; ++x) {
    rep.record("metric.zero_diagonal", d.hops(x, x) == 0, context + ": vertex " + std::to_string(x));
    for (Vertex y = x + 1; y < n; ++y) {
      if (d.hops(x, y) != d.hops(y, x)) {
        rep.record("metric.symmetric", false, context + ": pair " + std::to_string(x) + "," + std::to_string(y));
      }
    }
  }
  if (triples == 0) {
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y)
        for (Vertex z = 0; z < n; ++z) check(x, y, z);
  } else {
    Engine rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    for (std::size_t i = 0; i < triples; ++i) {
      const Vertex x = pick(rng), y = pick(rng), z = pick(rng);
      check(x, y, z);
    }
  }
}

void audit_triangle(AuditReport& rep, const TriangleReport& r, int diameter, const std::string& context) {
  const auto w = [&] { return describe(r, context); };
  rep.record("triangle.slim<=thin", r.slim <= r.thin, w());
  rep.record("triangle.thin<=4slim", r.thin <= 4 * r.slim, w());
  rep.record("triangle.minsize<=insize", HalfInt(r.minsize) <= r.insize, w());
  rep.record("triangle.insize<=3minsize", r.minsize == 0 || r.insize <= HalfInt(3 * r.minsize), w());
  rep.record("triangle.measures<=diameter",
             r.slim <= diameter && r.thin <= diameter && r.minsize <= diameter, w());
}

void audit_worst_case(AuditReport& rep, const WorstCase& wc, const std::string& context) {
  std::ostringstream os;
  os << context << ": hyp " << wc.hyp << " slim " << wc.slim << " thin " << wc.thin << " minsize " << wc.minsize
     << " insize " << wc.insize;
  const auto w = os.str();
  const HalfInt half = HalfInt::from_twice(1);
  rep.record("graph.hyp<=2slim+1/2", wc.hyp <= HalfInt(2 * wc.slim) + half, w);
  rep.record("graph.hyp<=thin+1/2", wc.hyp <= HalfInt(wc.thin) + half, w);
  rep.record("graph.slim<=3hyp+1/2", HalfInt(wc.slim) <= wc.hyp + wc.hyp + wc.hyp + half, w);
  rep.record("graph.thin<=4slim", wc.thin <= 4 * wc.slim, w);
}

void audit_averages(AuditReport& rep, const Rational& fp, const ExactAverages& t, const std::string& context) {
  const Rational half(1, 2);
  const auto &zeta = *t.slim, &tau = *t.thin, &eta = *t.minsize, &iota = *t.insize;
  std::ostringstream os;
  os << context << ": fp " << fp << " slim " << zeta << " thin " << tau << " minsize " << eta << " insize " << iota;
  const auto w = os.str();
  rep.record("avg.fp<=2slim+1/2", fp <= 2 * zeta + half, w);
  rep.record("avg.fp<=thin+1/2", fp <= tau + half, w);
  rep.record("avg.fp<=2minsize", fp <= 2 * eta, w);
  rep.record("avg.minsize<=insize", eta <= iota, w);
  rep.record("avg.slim<=thin", zeta <= tau, w);
  rep.record("avg.thin<=4slim", tau <= 4 * zeta, w);
  rep.record("avg.insize<=3minsize", iota <= 3 * eta, w);
  rep.record("avg.insize<=thin+1", iota <= tau + 1, w);
}

AuditReport audit_exhaustive_small(std::size_t max_n) {
  const auto catalog = connected_graph_catalog(max_n);
  std::vector<const Graph*> all;
  for (const auto& level : catalog)
    for (const auto& g : level) all.push_back(&g);
  std::vector<WorstCase> results(all.size());
  const auto n = static_cast<std::int64_t>(all.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count())
  for (std::int64_t i = 0; i < n; ++i) results[i] = worst_case_measures(*all[i]);
  AuditReport rep;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::ostringstream os;
    os << "graph " << i << " (" << all[i]->vertex_count() << " vertices, edges";
    for (const auto& [a, b] : all[i]->edges()) os << ' ' << a << '-' << b;
    os << ')';
    audit_worst_case(rep, results[i], os.str());
  }
  return rep;
}

AuditReport audit_sampled(const GraphMetric& m, std::size_t samples, std::uint64_t seed,
                          const std::string& context) {
  const auto dist = VertexDistribution::uniform(m.size());
  std::vector<TriangleReport> reports(samples);
  const auto n = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 64) num_threads(thread_count())
  for (std::int64_t i = 0; i < n; ++i) reports[i] = triangle_sample(m, dist, seed, static_cast<std::size_t>(i), false);
  const int diam = static_cast<int>(m.diameter());
  AuditReport rep;
  for (std::size_t i = 0; i < samples; ++i) {
    audit_triangle(rep, reports[i], diam, context + " sample " + std::to_string(i));
  }
  return rep;
}

}  // namespace hypavg
