#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "hypavg/audit.hpp"
#include "hypavg/catalog.hpp"
#include "hypavg/diagnostics.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/euclidean.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/reference.hpp"
#include "hypavg/report_io.hpp"
#include "hypavg/witness.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace hypavg;

namespace {

const fs::path kFixtures = HYPAVG_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Detail {
  std::ostringstream os;
  bool pass = true;
  void fail(const std::string& why) {
    if (pass) os.str("");
    if (!pass) os << "; ";
    os << why;
    pass = false;
  }
  Outcome done(const std::string& summary) {
    return {pass, pass ? summary : os.str()};
  }
};

std::string fmt(double v, int prec = 4) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << v;
  return os.str();
}

std::vector<Rational> uniform_rational(std::size_t n) { return std::vector<Rational>(n, Rational(1, n)); }

// 1 -------------------------------------------------------------------------

bool agrees(const Graph& g, bool with_averages) {
  const auto d = ref::apsp(g);
  const auto want = ref::worst_case(g);
  const auto got = worst_case_measures(g);
  if (std::llround(2 * hyp_exact(apsp(g)).value) != want.hyp_twice) return false;
  if (got.hyp.twice() != want.hyp_twice || got.slim != want.max.slim || got.thin != want.max.thin ||
      got.minsize != want.max.minsize || got.insize.twice() != want.max.insize_twice)
    return false;
  if (!with_averages) return true;
  const GraphMetric m(g);
  const auto dist = VertexDistribution::uniform(g.vertex_count());
  const auto w = uniform_rational(g.vertex_count());
  if (exact_avg_fp(m, dist) != ref::avg_fp(d, w)) return false;
  const auto a = exact_avg_triangles(g, m, dist);
  const auto b = ref::avg_triangles(g, d, w);
  return *a.slim == b.slim && *a.thin == b.thin && *a.minsize == b.minsize && *a.insize == b.insize;
}

Outcome oracle_equivalence() {
  Detail r;
  const auto cat = connected_graph_catalog(8);
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& g : cat[n]) {
      ++graphs;
      if (!agrees(g, true)) r.fail("catalog graph on " + std::to_string(n) + " vertices disagrees");
    }
  Engine rng(2024);
  std::uniform_int_distribution<std::size_t> size(2, 200);
  std::size_t ref_trees = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    const std::size_t n = t == 0 ? 200 : size(rng);
    const auto g = testing::random_tree(n, t);
    const GraphMetric m(g);
    const auto dist = VertexDistribution::uniform(n);
    ExactOptions big;
    big.fp_term_cap = 2'000'000'000;
    const auto w = worst_case_measures(g);
    const auto tri = exact_avg_triangles(g, m, dist, big);
    const bool zero = hyp_exact(m).value == 0 && w.hyp.twice() == 0 && w.slim == 0 && w.thin == 0 &&
                      w.minsize == 0 && w.insize.twice() == 0 && exact_avg_fp(m, dist, big) == 0 && *tri.slim == 0 &&
                      *tri.thin == 0 && *tri.minsize == 0 && *tri.insize == 0;
    if (!zero) r.fail("tree " + std::to_string(t) + " on " + std::to_string(n) + " vertices is not all zero");
    if (n <= 30) {
      ++ref_trees;
      if (!agrees(g, true)) r.fail("tree " + std::to_string(t) + " disagrees with the naive oracle");
    }
  }
  return r.done(std::to_string(graphs) + " catalog graphs and 50 trees agree exactly (" + std::to_string(ref_trees) +
                " trees also against the naive oracle)");
}

// 2 -------------------------------------------------------------------------

Outcome inequality_audit() {
  Detail r;
  AuditReport rep = audit_exhaustive_small(8);
  const auto cat = connected_graph_catalog(6);
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& g : cat[n]) {
      const GraphMetric m(g);
      const auto dist = VertexDistribution::uniform(n);
      audit_averages(rep, exact_avg_fp(m, dist), exact_avg_triangles(g, m, dist), "catalog");
    }
  for (const auto& e : fs::directory_iterator(kFixtures / "graphs")) {
    const auto g = load_graph_file(e.path().string());
    const GraphMetric m(g);
    const auto dist = VertexDistribution::uniform(g.vertex_count());
    audit_averages(rep, exact_avg_fp(m, dist), exact_avg_triangles(g, m, dist), e.path().filename().string());
  }
  const std::vector<std::pair<std::string, Graph>> models = {
      {"G_25", gen_Gn(25).graph},
      {"H_3,40", gen_HMn(3, 40).graph},
      {"RRG(500,3)", gen_rrg(500, 3, 1)},
      {"ER-giant(1000,5)", giant_component(gen_er(1000, 5, 1)).giant}};
  for (const auto& [name, g] : models) rep.merge(audit_sampled(GraphMetric(g), 25'000, 7, name));
  std::uint64_t checked = 0;
  for (const auto& [id, c] : rep.checks()) {
    checked += c.checked;
    if (const auto f = rep.failures(id)) r.fail(id + ": " + std::to_string(f) + " violations");
  }
  return r.done(std::to_string(checked) + " checks over " + std::to_string(rep.checks().size()) +
                " inequalities, 0 violations (100000 sampled triangles)");
}

// 3 -------------------------------------------------------------------------

Witness load_witness(const std::string& stem) {
  std::ifstream in(kFixtures / "witness" / (stem + ".json"));
  if (!in) throw std::runtime_error("missing witness fixture " + stem);
  return witness_from_json(Json::parse(in));
}

Outcome tight_witnesses() {
  Detail r;
  auto naive = [](const Witness& w) {
    const auto d = ref::apsp(w.graph);
    return ref::measure(d, w.triangle.xy.vertices, w.triangle.yz.vertices, w.triangle.zx.vertices);
  };
  const auto a = load_witness("slim1-thin4");
  const auto an = naive(a);
  if (!verify_witness(a) || an.slim != 1 || an.thin != 4) r.fail("slim1-thin4 does not measure (1, 4)");
  const auto b = load_witness("minsize1-insize3");
  const auto bn = naive(b);
  if (!verify_witness(b) || bn.minsize != 1 || bn.insize_twice != 6) r.fail("minsize1-insize3 does not measure (1, 3)");
  for (int n : {6, 10}) {
    const auto c = load_witness("fat-insize1-n" + std::to_string(n));
    const auto cn = naive(c);
    if (!verify_witness(c) || c.param != n || 2 * cn.slim < n || cn.insize_twice > 2)
      r.fail("fat-insize1 n=" + std::to_string(n) + " measures slim " + std::to_string(cn.slim));
  }
  return r.done("(slim,thin)=(1,4), (minsize,insize)=(1,3), fat slim>=n/2 with insize<=1 at n=6,10");
}

// 4 -------------------------------------------------------------------------

Outcome sampling_uniformity() {
  Detail r;
  constexpr int kSeeds = 100, kDraws = 60'000;
  std::size_t pairs = 0, worst_passes = kSeeds;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kFixtures / "graphs")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    const auto g = load_graph_file(file.string());
    const GraphMetric m(g);
    const auto d = ref::apsp(g);
    for (Vertex a = 0; a < static_cast<Vertex>(g.vertex_count()); ++a)
      for (Vertex b = a + 1; b < static_cast<Vertex>(g.vertex_count()); ++b) {
        const auto paths = ref::all_geodesics(g, d, a, b);
        if (paths.size() < 2 || paths.size() > 20) continue;
        ++pairs;
        auto key = [](const std::vector<Vertex>& p) {
          std::uint64_t h = 0;
          for (Vertex v : p) h = h * 1'000'003 + static_cast<std::uint64_t>(v) + 1;
          return h;
        };
        std::unordered_map<std::uint64_t, std::size_t> cell;
        for (std::size_t i = 0; i < paths.size(); ++i) cell[key(paths[i])] = i;
        if (cell.size() != paths.size()) throw std::logic_error("path key collision");
        const boost::math::chi_squared chi(static_cast<double>(paths.size() - 1));
        const double expected = static_cast<double>(kDraws) / static_cast<double>(paths.size());
        int passes = 0;
        for (int s = 0; s < kSeeds; ++s) {
          Engine rng = make_stream(static_cast<std::uint64_t>(s) + 1, static_cast<std::size_t>(a) * 4096 + b);
          std::vector<int> counts(paths.size());
          for (int k = 0; k < kDraws; ++k) {
            const auto side = sample_side(m, a, b, rng);
            const auto it = cell.find(key(side.vertices));
            if (it == cell.end() || paths[it->second] != side.vertices) {
              r.fail(file.filename().string() + ": sampled a non-geodesic");
              return r.done("");
            }
            ++counts[it->second];
          }
          double stat = 0;
          for (int c : counts) stat += (c - expected) * (c - expected) / expected;
          passes += boost::math::cdf(boost::math::complement(chi, stat)) > 0.01;
        }
        worst_passes = std::min<std::size_t>(worst_passes, passes);
        if (passes < 95)
          r.fail(file.filename().string() + " pair " + std::to_string(a) + "," + std::to_string(b) + ": " +
                 std::to_string(passes) + "/100 seeds");
      }
  }
  return r.done(std::to_string(pairs) + " pairs with 2<=sigma<=20, worst pair passes " + std::to_string(worst_passes) +
                "/100 seeds");
}

// 5-7, 9 ---------------------------------------------------------------------

struct Cell {
  double hyp = 0, slim = 0, minsize = 0;
};

Cell run_cell(const Graph& g, std::size_t fp_samples, std::size_t triangle_samples, std::uint64_t seed) {
  const GraphMetric m(g);
  const auto rep = estimate_avg(m, VertexDistribution::uniform(m.size()), fp_samples, triangle_samples, seed);
  return {rep.fp ? rep.fp->mean : NAN, rep.slim->mean, rep.minsize->mean};
}

Outcome gn_gap() {
  Detail r;
  std::ostringstream vals;
  double prev = 1e9;
  Cell last;
  for (std::size_t n : {9, 16, 25, 36}) {
    last = run_cell(gen_Gn(n).graph, 100'000, 100'000, 1);
    const double floor_root = std::floor(std::sqrt(static_cast<double>(n)));
    vals << " n=" << n << ": hyp " << fmt(last.hyp) << " slim " << fmt(last.slim, 3);
    if (!(last.hyp < prev)) r.fail("hyp not decreasing at n=" + std::to_string(n));
    if (last.slim < 0.8 * floor_root) r.fail("slim " + fmt(last.slim) + " below 0.8*floor(sqrt n) at n=" + std::to_string(n));
    prev = last.hyp;
  }
  if (!(last.hyp < 0.5)) r.fail("hyp(36) = " + fmt(last.hyp) + " not below 0.5");
  return r.done(vals.str().substr(1));
}

Outcome hmn_gap() {
  Detail r;
  const auto c = run_cell(gen_HMn(4, 200).graph, 0, 100'000, 1);
  if (c.slim < 3.2 || c.slim > 4.0) r.fail("slim " + fmt(c.slim) + " outside [3.2, 4.0]");
  if (c.minsize > 0.2) r.fail("minsize " + fmt(c.minsize) + " above 0.2");
  return r.done("slim " + fmt(c.slim) + ", minsize " + fmt(c.minsize));
}

Outcome rrg_gap() {
  Detail r;
  std::ostringstream vals;
  std::vector<double> gaps;
  for (std::size_t n : {250, 500, 1000, 2000}) {
    const auto c = run_cell(gen_rrg(n, 3, 1), 100'000, 20'000, 1);
    gaps.push_back(c.slim - c.hyp);
    vals << " n=" << n << ": slim-hyp " << fmt(c.slim - c.hyp, 3) << " minsize-hyp " << fmt(c.minsize - c.hyp, 3);
    if (c.slim - c.hyp <= 0) r.fail("slim-hyp not positive at n=" + std::to_string(n));
    if (c.minsize - c.hyp <= 0) r.fail("minsize-hyp not positive at n=" + std::to_string(n));
  }
  for (std::size_t i = 1; i < gaps.size(); ++i)
    if (gaps[i] < gaps[i - 1]) r.fail("slim-hyp decreases at step " + std::to_string(i));
  return r.done(vals.str().substr(1));
}

// 8 -------------------------------------------------------------------------

Outcome dspl_variance() {
  Detail r;
  const double want = dspl_predicted_variance(3);
  int within = 0;
  std::ostringstream vals;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const GraphMetric m(gen_rrg(2000, 3, seed));
    const auto s = dspl_stats(m, 100'000, seed);
    within += std::abs(s.variance - want) <= 0.5;
    vals << ' ' << fmt(s.variance, 3);
  }
  if (within < 9) r.fail(std::to_string(within) + "/10 seeds within 0.5 of " + fmt(want, 3) + ":" + vals.str());
  return r.done(std::to_string(within) + "/10 seeds within 0.5 of " + fmt(want, 3) + ":" + vals.str());
}

Outcome er_gap() {
  Detail r;
  const double gamma = solve_giant_fraction(5);
  std::ostringstream vals;
  for (std::size_t n : {1000, 2000, 4000}) {
    const auto cm = giant_component(gen_er(n, 5, 1));
    const auto c = run_cell(cm.giant, 100'000, 20'000, 1);
    const double frac = cm.fraction();
    vals << " n=" << n << ": slim " << fmt(c.slim, 3) << " hyp/slim " << fmt(c.hyp / c.slim, 3) << " giant "
         << fmt(frac, 4);
    if (c.slim < 2) r.fail("slim " + fmt(c.slim) + " below 2 at n=" + std::to_string(n));
    if (c.hyp / c.slim > 0.8) r.fail("hyp/slim above 0.8 at n=" + std::to_string(n));
    if (frac < 0.97 * gamma || frac > 1.0) r.fail("giant fraction " + fmt(frac) + " at n=" + std::to_string(n));
  }
  return r.done(vals.str().substr(1) + " (gamma " + fmt(gamma, 6) + ")");
}

// 10 ------------------------------------------------------------------------

Outcome gaussian() {
  Detail r;
  std::ostringstream vals;
  double prev = 1e9;
  AvgReport last;
  for (std::size_t dim : {2, 10, 100, 1000}) {
    const auto cloud = sample_gaussian_cloud(200, dim, 1);
    const auto fp = estimate_avg_fp(cloud, VertexDistribution::uniform(200), {10'000, 1, 0, false});
    vals << " d=" << dim << ": fp " << fmt(fp.mean);
    if (!(fp.mean < prev)) r.fail("fp not decreasing at dim " + std::to_string(dim));
    prev = fp.mean;
    if (dim == 1000) last = estimate_cloud_triangles(cloud, 10'000, triangle_seed(1));
  }
  if (prev > 0.08) r.fail("fp(1000) = " + fmt(prev) + " above 0.08");
  const double half_root2 = std::sqrt(2.0) / 2, slim_target = std::sqrt(6.0) / 4;
  if (std::abs(last.thin->mean - half_root2) > 0.05) r.fail("thin " + fmt(last.thin->mean));
  if (std::abs(last.insize->mean - half_root2) > 0.05) r.fail("insize " + fmt(last.insize->mean));
  if (std::abs(last.slim->mean - slim_target) > 0.05) r.fail("slim " + fmt(last.slim->mean));
  return r.done(vals.str().substr(1) + "; d=1000 thin " + fmt(last.thin->mean) + " insize " +
                fmt(last.insize->mean) + " slim " + fmt(last.slim->mean));
}

// 11 ------------------------------------------------------------------------

Outcome three_atoms() {
  Detail r;
  std::ostringstream vals;
  for (const auto& [graph, atoms] : {std::pair{"c12", "c12_atoms"}, std::pair{"grid3x3", "grid3x3_atoms"}}) {
    const auto g = load_graph_file((kFixtures / "graphs" / (std::string(graph) + ".edges")).string());
    const auto dist = load_distribution_file((kFixtures / "dist" / (std::string(atoms) + ".dist")).string(),
                                             g.vertex_count());
    const auto& s = dist.support();
    if (s.size() != 3) {
      r.fail(std::string(atoms) + " does not have three atoms");
      continue;
    }
    // slim of the distinguished triangle averaged over its geodesic choices
    const auto d = ref::apsp(g);
    const auto xy = ref::all_geodesics(g, d, s[0], s[1]);
    const auto yz = ref::all_geodesics(g, d, s[1], s[2]);
    const auto zx = ref::all_geodesics(g, d, s[2], s[0]);
    Rational zeta = 0;
    for (const auto& p : xy)
      for (const auto& q : yz)
        for (const auto& t : zx) zeta += ref::slim(d, p, q, t);
    zeta /= Rational(xy.size() * yz.size() * zx.size());
    const GraphMetric m(g);
    const auto got = exact_avg_triangles(g, m, dist);
    const auto fp = exact_avg_fp(m, dist);
    vals << ' ' << graph << ": slim " << rational_string(*got.slim) << " = 2/9*" << rational_string(zeta);
    if (*got.slim != Rational(2, 9) * zeta) r.fail(std::string(graph) + ": slim " + rational_string(*got.slim));
    if (fp != 0) r.fail(std::string(graph) + ": hyp " + rational_string(fp));
    if (zeta == 0) r.fail(std::string(graph) + ": distinguished triangle has slim 0");
  }
  return r.done(vals.str().substr(1) + ", hyp 0");
}

// 12, 13 --------------------------------------------------------------------

Outcome colors_bound() {
  Detail r;
  Engine rng(12);
  int checked = 0;
  double min_margin = 1e18;
  while (checked < 10'000) {
    std::uniform_int_distribution<std::uint32_t> side(1, 10), colors(1, 12);
    std::uniform_real_distribution<double> density(0.05, 1.0);
    ColoredBipartite inst{side(rng), side(rng), {}};
    std::uniform_int_distribution<std::uint32_t> color(0, colors(rng) - 1);
    std::bernoulli_distribution coin(density(rng));
    for (std::uint32_t u = 0; u < inst.left; ++u)
      for (std::uint32_t v = 0; v < inst.right; ++v)
        if (coin(rng)) inst.edges.push_back({u, v, color(rng)});
    if (inst.edges.empty()) continue;
    ++checked;
    const auto m = verify_colors_bound(inst);
    min_margin = std::min(min_margin, m.margin);
    if (m.sign < 0) r.fail("negative margin on instance " + std::to_string(checked));
  }
  int rainbow = 0;
  for (std::uint32_t a = 1; a <= 12; ++a)
    for (std::uint32_t b = 1; b <= 12; ++b) {
      ColoredBipartite inst{a, b, {}};
      for (std::uint32_t u = 0; u < a; ++u)
        for (std::uint32_t v = 0; v < b; ++v) inst.edges.push_back({u, v, u * b + v});
      ++rainbow;
      if (verify_colors_bound(inst).sign != 0) r.fail("rainbow K_" + std::to_string(a) + "," + std::to_string(b));
    }
  return r.done("10000 random instances, min margin " + fmt(min_margin) + "; margin 0 on " + std::to_string(rainbow) +
                " rainbow K_a,b");
}

Outcome traffic_bound_check() {
  Detail r;
  std::ostringstream vals;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = gen_rrg(500, 3, seed);
    const auto d = apsp(g);
    const auto t = traffic_all(d);
    const auto worst = *std::max_element(t.begin(), t.end());
    const double bound = traffic_bound(3, static_cast<int>(d.diameter()));
    vals << ' ' << worst << "<" << fmt(bound, 0);
    if (!(static_cast<double>(worst) < bound)) r.fail("seed " + std::to_string(seed) + ": " + std::to_string(worst));
  }
  return r.done("max T(w) vs bound:" + vals.str());
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "inequality audit", inequality_audit},
      {3, "tight witnesses", tight_witnesses},
      {4, "geodesic sampling uniformity", sampling_uniformity},
      {5, "G_n gap", gn_gap},
      {6, "H_{M,n} gap", hmn_gap},
      {7, "RRG gap", rrg_gap},
      {8, "DSPL variance", dspl_variance},
      {9, "ER gap", er_gap},
      {10, "Gaussian example", gaussian},
      {11, "3-atom example", three_atoms},
      {12, "colors-count verifier", colors_bound},
      {13, "traffic bound", traffic_bound_check},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    } else {
      std::cerr << "usage: acceptance [--only N[,N...]]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
