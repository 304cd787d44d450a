#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypavg/diagnostics.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/triangle_measures.hpp"

namespace hypavg {

struct AuditCheck {
  std::string id;
  std::uint64_t checked = 0;
  std::vector<std::string> violations;  // witness descriptions, capped
};

class AuditReport {
 public:
  /// Records one instance of inequality `id`; `witness` is stored on failure.
  void record(const std::string& id, bool holds, const std::string& witness = {});
  void merge(const AuditReport& other);

  const std::map<std::string, AuditCheck>& checks() const { return checks_; }
  std::uint64_t violation_count() const;
  std::uint64_t failures(const std::string& id) const;
  bool passed() const { return violation_count() == 0; }

  static constexpr std::size_t kMaxStoredWitnesses = 20;

 private:
  std::map<std::string, AuditCheck> checks_;
  std::map<std::string, std::uint64_t> failures_;
};

/// Zero diagonal, symmetry and the triangle inequality on up to `triples`
/// random triples (all triples when 0).
void audit_metric(AuditReport& rep, const DistanceMatrix& d, std::size_t triples, std::uint64_t seed,
                  const std::string& context);

/// slim <= thin <= 4 slim, minsize <= insize <= 3 minsize, all <= diameter.
void audit_triangle(AuditReport& rep, const TriangleReport& r, int diameter, const std::string& context);

/// hyp <= 2 slim + 1/2, hyp <= thin + 1/2, slim <= 3 hyp + 1/2, thin <= 4 slim.
void audit_worst_case(AuditReport& rep, const WorstCase& w, const std::string& context);

/// Expectation-level inequalities on exact averages.
void audit_averages(AuditReport& rep, const Rational& fp, const ExactAverages& tri, const std::string& context);

/// Worst-case inequalities on every connected graph with at most max_n vertices.
AuditReport audit_exhaustive_small(std::size_t max_n);

/// Per-triangle inequalities over `samples` sampled triangles (uniform corners).
AuditReport audit_sampled(const GraphMetric& m, std::size_t samples, std::uint64_t seed,
                          const std::string& context);

}  // namespace hypavg
