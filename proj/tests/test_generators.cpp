#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <sstream>

#include "hypavg/diagnostics.hpp"
#include "hypavg/error.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/metric.hpp"

namespace hypavg {
namespace {

std::map<std::string, Vertex> index_of(const LabeledGraph& lg) {
  std::map<std::string, Vertex> id;
  for (std::size_t v = 0; v < lg.labels.size(); ++v) id[lg.labels[v]] = static_cast<Vertex>(v);
  return id;
}

TEST(Gn, SmallCounts) {
  const auto lg = gen_Gn(3);
  EXPECT_EQ(gn_chain_length(3), 3u);
  EXPECT_EQ(lg.graph.vertex_count(), 12u);
  EXPECT_EQ(lg.graph.edge_count(), 12u);
  EXPECT_EQ(gn_chain_length(9), 7u);
  EXPECT_EQ(gen_Gn(9).graph.vertex_count(), 9u + 36u * 7u);
}

TEST(Gn, HubDistances) {
  for (std::size_t n : {3, 4, 9, 10}) {
    const auto lg = gen_Gn(n);
    const auto d = apsp(lg.graph);
    const int m = static_cast<int>(gn_chain_length(n));
    for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
      for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j) EXPECT_EQ(d.hops(i, j), m + 1);
  }
  EXPECT_THROW(gen_Gn(2), std::invalid_argument);
}

TEST(Gn, GenericQuadrupleSums) {
  // four points on chains with pairwise distinct hubs: all three sums agree
  const auto lg = gen_Gn(9);
  const auto d = apsp(lg.graph);
  const auto id = index_of(lg);
  Engine rng(3);
  std::uniform_int_distribution<int> pos(1, 7);
  for (int t = 0; t < 200; ++t) {
    const std::array<std::string, 4> chains = {"1_2", "3_4", "5_6", "7_8"};
    std::array<Vertex, 4> v{};
    for (int k = 0; k < 4; ++k) v[k] = id.at("b" + chains[k] + "_" + std::to_string(pos(rng)));
    const int p = d.hops(v[0], v[1]) + d.hops(v[2], v[3]);
    EXPECT_EQ(p, d.hops(v[0], v[2]) + d.hops(v[1], v[3]));
    EXPECT_EQ(p, d.hops(v[0], v[3]) + d.hops(v[1], v[2]));
  }
}

TEST(Hmn, CountsAndShape) {
  const auto lg = gen_HMn(1, 2);
  EXPECT_EQ(lg.graph.vertex_count(), 10u);
  for (std::size_t M : {1, 2, 3})
    for (std::size_t n : {2, 3, 5}) EXPECT_EQ(gen_HMn(M, n).graph.vertex_count(), n + M * n * n + 4 * M * (n - 1));
  const auto h = gen_HMn(3, 4);
  const auto d = apsp(h.graph);
  const auto id = index_of(h);
  EXPECT_EQ(d.hops(id.at("c1"), id.at("c2")), 7);
  EXPECT_EQ(d.hops(id.at("a1_1"), id.at("a4_5")), 2 + 3 * 7);
  EXPECT_THROW(gen_HMn(0, 3), std::invalid_argument);
  EXPECT_THROW(gen_HMn(2, 1), std::invalid_argument);
}

TEST(Rrg, SmallCases) {
  const auto k4 = gen_rrg(4, 3, 1);
  EXPECT_EQ(k4.edge_count(), 6u);
  EXPECT_THROW(gen_rrg(5, 3, 1), std::invalid_argument);
  EXPECT_THROW(gen_rrg(4, 4, 1), std::invalid_argument);
  try {
    gen_rrg(5, 3, 1);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("n·d must be even"), std::string::npos);
  }
}

TEST(Rrg, RegularConnectedDeterministic) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = gen_rrg(100, 3, seed);
    for (Vertex v = 0; v < 100; ++v) ASSERT_EQ(g.degree(v), 3u);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.edges(), gen_rrg(100, 3, seed).edges());
  }
  EXPECT_NE(gen_rrg(100, 3, 1).edges(), gen_rrg(100, 3, 2).edges());
}

TEST(Rrg, BudgetExhausted) {
  EXPECT_THROW(gen_rrg(200, 3, 1, {.max_attempts = 0}), CapacityError);
}

TEST(Rrg, LabelSymmetry) {
  // every vertex is equally likely to sit on a triangle
  std::vector<int> hits(30);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = gen_rrg(30, 3, seed);
    for (Vertex v = 0; v < 30; ++v) {
      const auto nb = g.neighbors(v);
      bool tri = false;
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) tri = tri || g.has_edge(nb[i], nb[j]);
      hits[v] += tri;
    }
  }
  const double mean = std::accumulate(hits.begin(), hits.end(), 0.0) / 30;
  for (int h : hits) EXPECT_NEAR(h, mean, 5 * std::sqrt(mean) + 5);
}

TEST(Er, EdgeDensityAndErrors) {
  const auto g = gen_er(2000, 5, 7);
  EXPECT_NEAR(static_cast<double>(g.edge_count()), 5.0 * 1999 / 2, 250);
  EXPECT_EQ(gen_er(10, 10, 1).edge_count(), 45u);
  EXPECT_THROW(gen_er(10, 11, 1), std::invalid_argument);
  EXPECT_THROW(gen_er(10, 0, 1), std::invalid_argument);
  EXPECT_EQ(gen_er(300, 3, 4).edges(), gen_er(300, 3, 4).edges());
}

TEST(Er, GiantFraction) {
  const auto cm = giant_component(gen_er(2000, 5, 11));
  const double gamma = solve_giant_fraction(5);
  EXPECT_GE(cm.fraction(), 0.97 * gamma);
  EXPECT_LE(cm.fraction(), 1.0);
  EXPECT_TRUE(is_connected(cm.giant));
  const auto sub = giant_component(gen_er(2000, 0.5, 11));
  EXPECT_LT(sub.giant.vertex_count(), 100u);
}

TEST(Giant, RemapPreservesAdjacency) {
  const auto g = gen_er(500, 1.5, 2);
  const auto cm = giant_component(g);
  for (const auto& [a, b] : cm.giant.edges()) EXPECT_TRUE(g.has_edge(cm.to_original[a], cm.to_original[b]));
  for (const auto& [a, b] : g.edges()) {
    if (cm.to_giant[a] >= 0) EXPECT_TRUE(cm.giant.has_edge(cm.to_giant[a], cm.to_giant[b]));
  }
}

TEST(Giant, TieGoesToSmallestVertex) {
  const auto g = Graph::from_edges(6, std::vector<Edge>{{4, 5}, {1, 2}});
  const auto cm = giant_component(g);
  EXPECT_EQ(cm.to_original, (std::vector<Vertex>{1, 2}));
}

TEST(Labels, OneLinePerVertex) {
  std::ostringstream os;
  write_labels(os, gen_Gn(3));
  const auto text = os.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
  EXPECT_EQ(text.substr(0, 5), "0 a1\n");
}

}  // namespace
}  // namespace hypavg
