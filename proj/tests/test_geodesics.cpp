#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>

#include "hypavg/error.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/geodesics.hpp"
#include "hypavg/reference.hpp"
#include "test_support.hpp"

namespace hypavg {
namespace {

using testing::random_connected;
using testing::random_with_trees;

// k diamonds in series: 2^k geodesics end to end.
Graph diamond_chain(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    const Vertex a = 3 * i, b = a + 1, c = a + 2, d = a + 3;
    e.insert(e.end(), {{a, b}, {a, c}, {b, d}, {c, d}});
  }
  return Graph::from_edges(3 * k + 1, e);
}

double chi_square_p(const std::map<std::vector<Vertex>, int>& counts, std::size_t cells, int draws) {
  const double expected = static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0;
  for (const auto& [p, c] : counts) stat += (c - expected) * (c - expected) / expected;
  stat += static_cast<double>(cells - counts.size()) * expected;
  if (cells == 1) return 1.0;
  boost::math::chi_squared dist(static_cast<double>(cells - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(GeodesicDag, CountsMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_connected(20, 0.15, seed);
    const auto d = ref::apsp(g);
    for (Vertex s = 0; s < 20; s += 3) {
      const auto dag = build_dag(g, s);
      EXPECT_EQ(dag.path_count(s), 1);
      for (Vertex t = 0; t < 20; ++t) {
        ASSERT_EQ(dag.distance(t), d[s][t]);
        ASSERT_EQ(dag.path_count(t), ref::all_geodesics(g, d, s, t).size());
        PathCount sum = t == s ? 1 : 0;
        for (Vertex u : dag.predecessors(t)) {
          ASSERT_EQ(dag.distance(u), dag.distance(t) - 1);
          sum += dag.path_count(u);
        }
        ASSERT_EQ(sum, dag.path_count(t));
      }
    }
  }
}

TEST(GeodesicDag, PairDagCountsMatch) {
  const auto g = random_with_trees(18, 10, 0.2, 4);
  const GraphMetric m(g);
  const auto dm = apsp(g);
  for (Vertex s = 0; s < 28; s += 2)
    for (Vertex t = 0; t < 28; t += 3) {
      const auto full = build_dag(g, s);
      const auto a = build_pair_dag(g, m, s, t);
      const auto b = build_pair_dag(g, dm, s, t);
      ASSERT_EQ(a.path_count(t), full.path_count(t));
      ASSERT_EQ(b.path_count(t), full.path_count(t));
    }
}

TEST(GeodesicDag, WideCountsAfterOverflow) {
  const auto g = diamond_chain(70);
  const auto dag = build_dag(g, 0);
  EXPECT_FALSE(dag.counts_fit_64());
  EXPECT_EQ(dag.path_count(210), PathCount(1) << 70);
  Engine rng(5);
  const GraphMetric m(g);
  for (int i = 0; i < 20; ++i) {
    const auto s = sample_geodesic(dag, 210, rng);
    EXPECT_TRUE(is_valid_segment(g, m, s));
  }
}

TEST(GeodesicDag, HmnCounts) {
  const auto lg = gen_HMn(2, 4);
  const auto& g = lg.graph;
  std::map<std::string, Vertex> id;
  for (std::size_t v = 0; v < lg.labels.size(); ++v) id[lg.labels[v]] = static_cast<Vertex>(v);
  for (int i = 1; i < 4; ++i) {
    const auto dag = build_dag(g, id["c" + std::to_string(i)]);
    const Vertex next = id["c" + std::to_string(i + 1)];
    EXPECT_EQ(dag.path_count(next), 2);
    EXPECT_EQ(dag.distance(next), 2 * 2 + 1);
  }
  // first leaf of cluster i to first leaf of cluster j
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      const auto dag = build_dag(g, id["a" + std::to_string(i) + "_1"]);
      EXPECT_EQ(dag.path_count(id["a" + std::to_string(j) + "_1"]), 1 << (j - i));
    }
}

TEST(SampleGeodesic, ValidAndCoversAll) {
  const auto g = grid_graph(3, 4);
  const GraphMetric m(g);
  const auto dag = build_dag(g, 0);
  Engine rng(9);
  std::map<std::vector<Vertex>, int> counts;
  for (int i = 0; i < 2000; ++i) {
    const auto s = sample_geodesic(dag, 11, rng);
    ASSERT_TRUE(is_valid_segment(g, m, s));
    ++counts[s.vertices];
  }
  EXPECT_EQ(counts.size(), 10u);
}

TEST(SampleGeodesic, ChiSquareUniform) {
  const auto g = grid_graph(3, 4);
  const auto dag = build_dag(g, 0);
  Engine rng(13);
  std::map<std::vector<Vertex>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[sample_geodesic(dag, 11, rng).vertices];
  EXPECT_GT(chi_square_p(counts, 10, draws), 0.001);
}

TEST(SampleGeodesic, TargetOutsideDag) {
  const auto g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto dag = build_dag(g, 0);
  Engine rng(1);
  EXPECT_THROW(sample_geodesic(dag, 3, rng), PreconditionError);
}

TEST(SampleTriangle, SidesUniformThroughTrees) {
  // core C_6 with pendant paths; sides between leaves cross trees and core
  std::vector<Edge> e;
  for (Vertex i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
  e.insert(e.end(), {{0, 6}, {6, 7}, {3, 8}});
  const auto g = Graph::from_edges(9, e);
  const GraphMetric m(g);
  Engine rng(21);
  std::map<std::vector<Vertex>, int> counts;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const auto t = sample_triangle(m, 7, 8, 1, rng);
    ASSERT_TRUE(is_valid_segment(g, m, t.xy));
    ASSERT_TRUE(is_valid_segment(g, m, t.yz));
    ASSERT_TRUE(is_valid_segment(g, m, t.zx));
    ++counts[t.xy.vertices];
  }
  EXPECT_EQ(counts.size(), 2u);
  EXPECT_GT(chi_square_p(counts, 2, draws), 0.001);
}

TEST(SampleSide, SameDrawsAsPairDag) {
  // core-only graphs, so sample_side reduces to the pair DAG walk
  for (const auto& g : {grid_graph(4, 5), hypercube_graph(4), diamond_chain(70), random_connected(30, 0.15, 3)}) {
    const GraphMetric m(g);
    const auto d = apsp(g);
    for (Vertex a = 0; a < 6; ++a) {
      const auto b = static_cast<Vertex>(g.vertex_count() - 1 - a);
      Engine r1(a + 17), r2(a + 17);
      for (int k = 0; k < 50; ++k) {
        const auto want = sample_geodesic(build_pair_dag(g, d, a, b), b, r1);
        ASSERT_EQ(sample_side(m, a, b, r2).vertices, want.vertices);
      }
    }
  }
}

TEST(SampleTriangle, Degenerate) {
  const GraphMetric m(cycle_graph(5));
  Engine rng(1);
  EXPECT_TRUE(sample_triangle(m, 1, 1, 3, rng).degenerate);
  EXPECT_FALSE(sample_triangle(m, 0, 1, 3, rng).degenerate);
}

TEST(SampleTriangle, CrossComponentThrows) {
  const GraphMetric m(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  Engine rng(1);
  EXPECT_THROW(sample_triangle(m, 0, 1, 2, rng), PreconditionError);
}

TEST(Enumerate, MatchesNaiveAndCap) {
  const auto g = grid_graph(4, 4);
  const auto d = ref::apsp(g);
  const auto dag = build_dag(g, 0);
  auto got = enumerate_geodesics(dag, 15, 100);
  auto want = ref::all_geodesics(g, d, 0, 15);
  std::vector<std::vector<Vertex>> paths;
  for (const auto& s : got) paths.push_back(s.vertices);
  std::sort(paths.begin(), paths.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(paths, want);
  EXPECT_THROW(enumerate_geodesics(dag, 15, 19), CapacityError);
}

TEST(UniformBelow, RangeAndSpread) {
  Engine rng(3);
  const PathCount big = (PathCount(1) << 100) + 7;
  for (int i = 0; i < 200; ++i) {
    const auto v = uniform_below(big, rng);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, big);
  }
  std::vector<int> hist(5);
  for (int i = 0; i < 5000; ++i) ++hist[static_cast<int>(uniform_below(PathCount(5), rng))];
  for (int c : hist) EXPECT_NEAR(c, 1000, 150);
}

TEST(MakeTriangle, CornerMismatchThrows) {
  GeodesicSegment a{0, 1, {0, 1}}, b{1, 2, {1, 2}}, c{3, 0, {3, 0}};
  EXPECT_THROW(make_triangle(a, b, c), std::invalid_argument);
}

TEST(InternalPoints, OffsetsAreGromovProducts) {
  const auto g = random_connected(25, 0.12, 8);
  const GraphMetric m(g);
  const auto d = apsp(g);
  Engine rng(4);
  std::uniform_int_distribution<Vertex> pick(0, 24);
  for (int i = 0; i < 300; ++i) {
    const Vertex x = pick(rng), y = pick(rng), z = pick(rng);
    const auto tri = sample_triangle(m, x, y, z, rng);
    if (tri.degenerate) {
      EXPECT_THROW(locate_internal_points(m, tri), PreconditionError);
      continue;
    }
    const auto p = locate_internal_points(m, tri);
    EXPECT_EQ(p.m_yz.offset, gromov_product(d, x, z, y));
    EXPECT_EQ(p.m_zx.offset, gromov_product(d, y, x, z));
    EXPECT_EQ(p.m_xy.offset, gromov_product(d, z, y, x));
    // d(x,y) - d(y,m_yz) = d(x,z) - d(z,m_yz)
    const HalfInt len = HalfInt(d.hops(y, z));
    EXPECT_EQ(HalfInt(d.hops(x, y)) - p.m_yz.offset, HalfInt(d.hops(x, z)) - (len - p.m_yz.offset));
  }
}

TEST(PointDistance, MatchesEdgeSubdivision) {
  // subdividing every edge turns half offsets into vertices
  const auto g = random_connected(14, 0.2, 2);
  const auto edges = g.edges();
  std::vector<Edge> sub;
  std::map<Edge, Vertex> mid;
  Vertex next = 14;
  for (const auto& [a, b] : edges) {
    mid[{a, b}] = next;
    sub.emplace_back(a, next);
    sub.emplace_back(next, b);
    ++next;
  }
  const auto d2 = apsp(Graph::from_edges(next, sub));
  const GraphMetric m(g);
  Engine rng(6);
  std::uniform_int_distribution<Vertex> pick(0, 13);
  auto lift = [&](const SegmentPoint& p) {
    if (p.at_vertex()) return p.vertex();
    auto [a, b] = p.edge();
    return mid.at({std::min(a, b), std::max(a, b)});
  };
  for (int i = 0; i < 300; ++i) {
    const auto s = sample_geodesic(build_dag(g, pick(rng)), pick(rng), rng);
    const auto t = sample_geodesic(build_dag(g, pick(rng)), pick(rng), rng);
    for (std::int64_t a = 0; a <= 2 * static_cast<std::int64_t>(s.length()); ++a)
      for (std::int64_t b = 0; b <= 2 * static_cast<std::int64_t>(t.length()); ++b) {
        const SegmentPoint p{s.vertices, HalfInt::from_twice(a)}, q{t.vertices, HalfInt::from_twice(b)};
        ASSERT_EQ(point_distance(m, p, q).twice(), d2.hops(lift(p), lift(q)));
      }
  }
}

}  // namespace
}  // namespace hypavg
