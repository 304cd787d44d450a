#include <gtest/gtest.h>

#include "hypavg/error.hpp"
#include "hypavg/reference.hpp"
#include "hypavg/triangle_measures.hpp"
#include "test_support.hpp"

namespace hypavg {
namespace {

using testing::random_connected;
using testing::random_tree;
using testing::random_with_trees;

GeodesicSegment seg(std::vector<Vertex> v) { return {v.front(), v.back(), std::move(v)}; }

void expect_matches_naive(const Graph& g, std::uint64_t seed, int draws) {
  const GraphMetric m(g);
  const auto d = ref::apsp(g);
  Engine rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count()) - 1);
  for (int i = 0; i < draws; ++i) {
    const auto tri = sample_triangle(m, pick(rng), pick(rng), pick(rng), rng);
    const auto got = measure_all(m, tri);
    const auto want = ref::measure(d, tri.xy.vertices, tri.yz.vertices, tri.zx.vertices);
    ASSERT_EQ(got.slim, want.slim);
    ASSERT_EQ(got.thin, want.thin);
    ASSERT_EQ(got.minsize, want.minsize);
    ASSERT_EQ(got.insize.twice(), want.insize_twice);
  }
}

TEST(TriangleMeasures, MatchNaiveOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) expect_matches_naive(random_connected(30, 0.08, seed), seed, 300);
}

TEST(TriangleMeasures, MatchNaiveWithPendantTrees) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) expect_matches_naive(random_with_trees(20, 30, 0.15, seed), seed, 300);
}

TEST(TriangleMeasures, MatchNaiveOnGridsAndCycles) {
  expect_matches_naive(grid_graph(6, 7), 1, 500);
  expect_matches_naive(cycle_graph(17), 2, 500);
  expect_matches_naive(cycle_graph(24), 3, 500);
  expect_matches_naive(hypercube_graph(5), 4, 300);
}

TEST(TriangleMeasures, TreesScoreZero) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_tree(80, seed);
    const GraphMetric m(g);
    Engine rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, 79);
    for (int i = 0; i < 200; ++i) {
      const auto r = measure_all(m, sample_triangle(m, pick(rng), pick(rng), pick(rng), rng));
      ASSERT_EQ(r, (TriangleReport{0, 0, 0, HalfInt(0), r.degenerate}));
    }
  }
}

TEST(TriangleMeasures, DegenerateScoresZero) {
  const GraphMetric m(cycle_graph(8));
  Engine rng(1);
  const auto r = measure_all(m, sample_triangle(m, 2, 6, 2, rng));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.slim + r.thin + r.minsize, 0);
  EXPECT_EQ(r.insize, HalfInt(0));
}

TEST(TriangleMeasures, C3IsZeroSlim) {
  const GraphMetric m(cycle_graph(3));
  const auto tri = make_triangle(seg({0, 1}), seg({1, 2}), seg({2, 0}));
  const auto r = measure_all(m, tri);
  EXPECT_EQ(r.slim, 0);
  EXPECT_EQ(r.thin, 0);
  EXPECT_EQ(r.minsize, 1);
  EXPECT_EQ(r.insize, HalfInt(1));
}

TEST(TriangleMeasures, CycleC6) {
  const GraphMetric m(cycle_graph(6));
  const auto tri = make_triangle(seg({0, 1, 2}), seg({2, 3, 4}), seg({4, 5, 0}));
  const auto r = measure_all(m, tri);
  EXPECT_EQ(r.slim, 1);
  EXPECT_EQ(r.thin, 2);
  EXPECT_EQ(r.minsize, 2);
  EXPECT_EQ(r.insize, HalfInt(2));
}

TEST(TriangleMeasures, GridSlimOneThinFour) {
  const auto g = grid_graph(3, 3);
  const GraphMetric m(g);
  const auto tri = make_triangle(seg({0, 1, 2, 5}), seg({5, 4, 7}), seg({7, 6, 3, 0}));
  const auto r = measure_all(m, tri);
  EXPECT_EQ(r.slim, 1);
  EXPECT_EQ(r.thin, 4);
}

TEST(TriangleMeasures, PerTriangleInequalities) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_with_trees(60, 20, 0.05, seed);
    const GraphMetric m(g);
    const int diam = static_cast<int>(m.diameter());
    Engine rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, 79);
    for (int i = 0; i < 500; ++i) {
      const auto r = measure_all(m, sample_triangle(m, pick(rng), pick(rng), pick(rng), rng));
      ASSERT_LE(r.slim, r.thin);
      ASSERT_LE(r.thin, 4 * r.slim);
      ASSERT_LE(HalfInt(r.minsize), r.insize);
      ASSERT_LE(r.insize, HalfInt(3 * r.minsize));
      ASSERT_LE(r.insize, HalfInt(r.thin + 1));
      ASSERT_LE(std::max({r.slim, r.thin, r.minsize}), diam);
    }
  }
}

TEST(TriangleMeasures, InsizeFromPointsAgrees) {
  const auto g = random_connected(20, 0.15, 3);
  const GraphMetric m(g);
  Engine rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto tri = sample_triangle(m, 0, 7, 13, rng);
    EXPECT_EQ(insize(m, tri), insize(m, locate_internal_points(m, tri)));
  }
}

}  // namespace
}  // namespace hypavg
