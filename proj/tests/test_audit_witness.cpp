#include <gtest/gtest.h>

#include "hypavg/audit.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/witness.hpp"
#include "test_support.hpp"

namespace hypavg {
namespace {

TEST(Audit, TriangleChecksRecordWitnesses) {
  AuditReport rep;
  audit_triangle(rep, {1, 4, 1, HalfInt(2), false}, 5, "ok");
  EXPECT_TRUE(rep.passed());
  audit_triangle(rep, {1, 5, 1, HalfInt(2), false}, 5, "bad");
  EXPECT_EQ(rep.violation_count(), 1u);
  EXPECT_EQ(rep.failures("triangle.thin<=4slim"), 1u);
  EXPECT_EQ(rep.checks().at("triangle.thin<=4slim").checked, 2u);
  EXPECT_NE(rep.checks().at("triangle.thin<=4slim").violations.front().find("bad"), std::string::npos);
}

TEST(Audit, MergeAddsCounts) {
  AuditReport a, b;
  audit_triangle(a, {0, 0, 0, HalfInt(0), true}, 1, "x");
  audit_triangle(b, {2, 1, 0, HalfInt(0), false}, 3, "y");
  a.merge(b);
  EXPECT_EQ(a.checks().at("triangle.slim<=thin").checked, 2u);
  EXPECT_EQ(a.failures("triangle.slim<=thin"), 1u);
}

TEST(Audit, MetricSanityAndCorruption) {
  auto d = apsp(grid_graph(4, 4));
  AuditReport clean;
  audit_metric(clean, d, 0, 1, "grid");
  EXPECT_TRUE(clean.passed());
  d.row(0)[15] = 20;
  AuditReport bad;
  audit_metric(bad, d, 0, 1, "corrupt");
  EXPECT_FALSE(bad.passed());
  EXPECT_GT(bad.failures("metric.symmetric"), 0u);
  EXPECT_GT(bad.failures("metric.triangle_inequality"), 0u);
}

TEST(Audit, ExhaustiveSmallGraphs) {
  const auto rep = audit_exhaustive_small(6);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checks().at("graph.thin<=4slim").checked, 1u + 1 + 2 + 6 + 21 + 112);
}

TEST(Audit, SampledTrianglesOnModels) {
  const GraphMetric gn(gen_Gn(9).graph);
  EXPECT_TRUE(audit_sampled(gn, 3000, 1, "G_9").passed());
  const GraphMetric h(gen_HMn(2, 10).graph);
  EXPECT_TRUE(audit_sampled(h, 3000, 2, "H_2,10").passed());
}

TEST(Audit, HmnSlimAndMinsizeBounded) {
  const std::size_t M = 3;
  const GraphMetric h(gen_HMn(M, 12).graph);
  const auto dist = VertexDistribution::uniform(h.size());
  for (std::size_t i = 0; i < 3000; ++i) {
    const auto r = triangle_sample(h, dist, 5, i, false);
    ASSERT_LE(r.slim, static_cast<int>(M));
    ASSERT_LE(r.minsize, static_cast<int>(2 * M));
  }
}

TEST(Witness, KindNames) {
  for (auto k : {WitnessKind::kSlim1Thin4, WitnessKind::kMinsize1Insize3, WitnessKind::kFatInsize1})
    EXPECT_EQ(parse_witness_kind(to_string(k)), k);
  EXPECT_FALSE(parse_witness_kind("nope").has_value());
}

TEST(Witness, SearchSlim1Thin4) {
  const auto w = find_witness(WitnessKind::kSlim1Thin4, 200000, 1);
  ASSERT_TRUE(w.found);
  EXPECT_TRUE(verify_witness(w));
  EXPECT_EQ(w.report.slim, 1);
  EXPECT_EQ(w.report.thin, 4);
}

TEST(Witness, SearchMinsize1Insize3) {
  const auto w = find_witness(WitnessKind::kMinsize1Insize3, 2000000, 1);
  ASSERT_TRUE(w.found);
  EXPECT_TRUE(verify_witness(w));
  EXPECT_EQ(w.report.minsize, 1);
  EXPECT_EQ(w.report.insize, HalfInt(3));
}

TEST(Witness, FatInsizeOne) {
  for (int n : {6, 10}) {
    const auto w = find_witness(WitnessKind::kFatInsize1, 1000, 1, n);
    ASSERT_TRUE(w.found);
    EXPECT_TRUE(verify_witness(w));
    EXPECT_GE(2 * w.report.slim, n);
    EXPECT_LE(w.report.insize, HalfInt(1));
  }
}

TEST(Witness, TamperedWitnessFailsVerification) {
  auto w = find_witness(WitnessKind::kFatInsize1, 1000, 1, 6);
  ASSERT_TRUE(w.found);
  w.report.slim += 1;
  EXPECT_FALSE(verify_witness(w));
}

}  // namespace
}  // namespace hypavg
