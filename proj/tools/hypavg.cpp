#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "hypavg/audit.hpp"
#include "hypavg/diagnostics.hpp"
#include "hypavg/error.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/euclidean.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/graph_metric.hpp"
#include "hypavg/report_io.hpp"
#include "hypavg/witness.hpp"

namespace fs = std::filesystem;
using namespace hypavg;

namespace {

struct SourceOptions {
  std::string graph_file;
  std::string family;
  std::size_t n = 0;
  std::size_t d = 3;
  std::size_t m = 1;
  double lambda = 0;
  std::size_t dim = 2;
  std::size_t count = 200;
  std::uint64_t seed = 1;
  bool giant = false;
};

struct Source {
  Graph graph;
  std::vector<std::string> labels;
  std::optional<PointCloud> cloud;
  Json descriptor;
};

void add_family_options(CLI::App* cmd, SourceOptions& o) {
  cmd->add_option("--family", o.family, "gn, hmn, rrg, er or gauss")
      ->check(CLI::IsMember({"gn", "hmn", "rrg", "er", "gauss"}));
  cmd->add_option("--n", o.n, "size parameter");
  cmd->add_option("--d", o.d, "degree (rrg)");
  cmd->add_option("--m", o.m, "M (hmn)");
  cmd->add_option("--lambda", o.lambda, "mean degree (er)");
  cmd->add_option("--dim", o.dim, "dimension (gauss)");
  cmd->add_option("--count", o.count, "points (gauss)");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--giant", o.giant, "restrict to the largest component");
}

Error usage(const std::string& what) { return Error(ExitCode::kUsage, what); }

void require(bool ok, const std::string& what) {
  if (!ok) throw usage(what);
}

Source generate(const SourceOptions& o) {
  Source s;
  s.descriptor = {{"source", "family"}, {"family", o.family}, {"seed", o.seed}};
  try {
    if (o.family == "gn") {
      require(o.n > 0, "--n is required for gn");
      auto lg = gen_Gn(o.n);
      s.graph = std::move(lg.graph);
      s.labels = std::move(lg.labels);
      s.descriptor["n"] = o.n;
    } else if (o.family == "hmn") {
      require(o.n > 0, "--n is required for hmn");
      auto lg = gen_HMn(o.m, o.n);
      s.graph = std::move(lg.graph);
      s.labels = std::move(lg.labels);
      s.descriptor["M"] = o.m;
      s.descriptor["n"] = o.n;
    } else if (o.family == "rrg") {
      require(o.n > 0, "--n is required for rrg");
      s.graph = gen_rrg(o.n, o.d, o.seed);
      s.descriptor["n"] = o.n;
      s.descriptor["d"] = o.d;
    } else if (o.family == "er") {
      require(o.n > 0, "--n is required for er");
      s.graph = gen_er(o.n, o.lambda, o.seed);
      s.descriptor["n"] = o.n;
      s.descriptor["lambda"] = o.lambda;
    } else if (o.family == "gauss") {
      s.cloud = sample_gaussian_cloud(o.count, o.dim, o.seed);
      s.descriptor["dim"] = o.dim;
      s.descriptor["count"] = o.count;
      return s;
    } else {
      throw usage("unknown family '" + o.family + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw usage(e.what());
  }
  return s;
}

void restrict_to_giant(Source& s, bool giant) {
  const auto comps = connected_components(s.graph);
  s.descriptor["components"] = comps.count();
  if (comps.count() <= 1) return;
  if (!giant) {
    throw PreconditionError("graph is disconnected (" + std::to_string(comps.count()) +
                            " components); pass --giant to use the largest one");
  }
  auto cm = giant_component(s.graph);
  s.descriptor["giant"] = true;
  s.descriptor["giant_fraction"] = cm.fraction();
  s.descriptor["original_vertices"] = s.graph.vertex_count();
  if (!s.labels.empty()) {
    std::vector<std::string> kept;
    for (Vertex v : cm.to_original) kept.push_back(s.labels[v]);
    s.labels = std::move(kept);
  }
  s.graph = std::move(cm.giant);
}

Source load_source(const SourceOptions& o, bool need_connected) {
  Source s;
  if (!o.graph_file.empty()) {
    require(o.family.empty(), "give either a graph file or --family, not both");
    s.graph = load_graph_file(o.graph_file);
    s.descriptor = {{"source", "file"}, {"path", o.graph_file}};
  } else {
    require(!o.family.empty(), "a graph file or --family is required");
    s = generate(o);
  }
  if (s.cloud) return s;
  if (need_connected) restrict_to_giant(s, o.giant);
  s.descriptor["vertices"] = s.graph.vertex_count();
  s.descriptor["edges"] = s.graph.edge_count();
  return s;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file_atomic(path, text);
  }
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

// gen ----------------------------------------------------------------------

struct GenOptions {
  SourceOptions src;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  require(!o.src.family.empty(), "--family is required");
  Source s = generate(o.src);
  if (s.cloud) {
    std::ostringstream os;
    write_csv(os, *s.cloud);
    emit(o.out, os.str());
    (o.out.empty() ? std::cerr : std::cout) << "gauss: " << s.cloud->size() << " x " << s.cloud->dim() << '\n';
    return 0;
  }
  if (o.src.giant) restrict_to_giant(s, true);
  emit(o.out, edge_list_text(s.graph));
  if (!s.labels.empty() && !o.out.empty()) {
    std::ostringstream os;
    write_labels(os, {s.graph, s.labels});
    write_file_atomic(o.out + ".labels", os.str());
  }
  (o.out.empty() ? std::cerr : std::cout) << o.src.family << ": " << s.graph.vertex_count() << " vertices, "
                                          << s.graph.edge_count() << " edges\n";
  return 0;
}

// measure ------------------------------------------------------------------

struct MeasureOptions {
  SourceOptions src;
  std::vector<Vertex> triangle;
  bool worst_case = false;
  bool hyp = false;
  std::uint64_t geodesic_cap = 10'000;
  std::string json;
};

Json half(HalfInt h) { return h.to_double(); }

int cmd_measure(const MeasureOptions& o) {
  Source s = load_source(o.src, true);
  require(!s.cloud, "measure works on graphs");
  const GraphMetric m(s.graph);
  Json doc = {{"graph", s.descriptor}, {"diameter", m.diameter()}};
  if (!o.triangle.empty()) {
    require(o.triangle.size() == 3, "--triangle takes three vertex ids");
    for (Vertex v : o.triangle) require(v >= 0 && static_cast<std::size_t>(v) < m.size(), "vertex id out of range");
    Engine rng(o.src.seed);
    const auto tri = sample_triangle(m, o.triangle[0], o.triangle[1], o.triangle[2], rng);
    const auto r = measure_all(m, tri);
    doc["triangle"] = {{"corners", o.triangle},
                       {"xy", tri.xy.vertices},
                       {"yz", tri.yz.vertices},
                       {"zx", tri.zx.vertices},
                       {"slim", r.slim},
                       {"thin", r.thin},
                       {"minsize", r.minsize},
                       {"insize", half(r.insize)},
                       {"degenerate", r.degenerate}};
  }
  if (o.hyp) {
    const auto h = hyp_exact(m);
    doc["hyp"] = {{"value", h.value}, {"witness", h.witness}};
  }
  if (o.worst_case) {
    const auto w = worst_case_measures(s.graph, o.geodesic_cap);
    doc["worst_case"] = {{"hyp", half(w.hyp)},      {"slim", w.slim},           {"thin", w.thin},
                         {"minsize", w.minsize},    {"insize", half(w.insize)}, {"hyp_witness", w.hyp_witness}};
  }
  emit(o.json, doc.dump(2) + "\n");
  return 0;
}

// estimate -----------------------------------------------------------------

struct EstimateOptions {
  SourceOptions src;
  std::string dist_file;
  std::size_t samples = 10'000;
  std::optional<std::size_t> fp_samples;
  bool exact = false;
  std::uint64_t geodesic_cap = 10'000;
  std::string json;
};

std::string summary_line(const char* name, const std::optional<Estimate>& e) {
  if (!e) return "";
  std::ostringstream os;
  os << std::setw(8) << name << "  " << std::fixed << std::setprecision(6) << e->mean;
  if (!e->exact) os << " +- " << e->std_error;
  os << '\n';
  return os.str();
}

int cmd_estimate(const EstimateOptions& o) {
  Source s = load_source(o.src, true);
  const std::size_t fp_samples = o.fp_samples.value_or(o.samples);
  AvgReport rep;
  Json dist_desc = {{"kind", "uniform"}};
  std::optional<ExactAverages> exact;
  if (s.cloud) {
    require(!o.exact, "--exact works on graphs");
    require(o.dist_file.empty(), "--dist works on graphs");
    const auto t0 = std::chrono::steady_clock::now();
    if (o.samples > 0) rep = estimate_cloud_triangles(*s.cloud, o.samples, triangle_seed(o.src.seed));
    if (fp_samples > 0) {
      rep.fp = estimate_avg_fp(*s.cloud, VertexDistribution::uniform(s.cloud->size()),
                               {fp_samples, o.src.seed, 0, false});
    }
    rep.fp_samples = fp_samples;
    rep.seed = o.src.seed;
    rep.diameter = s.cloud->diameter();
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } else {
    const GraphMetric m(s.graph);
    const auto dist = o.dist_file.empty() ? VertexDistribution::uniform(m.size())
                                          : load_distribution_file(o.dist_file, m.size());
    if (!o.dist_file.empty()) {
      dist_desc = {{"kind", "file"}, {"path", o.dist_file}, {"support", dist.support().size()}};
    }
    if (o.exact) {
      const auto t0 = std::chrono::steady_clock::now();
      ExactOptions eo;
      eo.geodesic_cap = o.geodesic_cap;
      exact = exact_avg_triangles(s.graph, m, dist, eo);
      exact->fp = exact_avg_fp(m, dist, eo);
      rep = to_report(*exact, m.diameter());
      rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    } else {
      rep = estimate_avg(m, dist, fp_samples, o.samples, o.src.seed);
    }
  }
  const auto doc = avg_report_json(rep, s.descriptor, dist_desc, exact ? &*exact : nullptr);
  emit(o.json, doc.dump(2) + "\n");
  if (!o.json.empty() && o.json != "-") {
    std::cout << summary_line("fp", rep.fp) << summary_line("slim", rep.slim) << summary_line("thin", rep.thin)
              << summary_line("minsize", rep.minsize) << summary_line("insize", rep.insize);
  }
  return 0;
}

// experiment ---------------------------------------------------------------

struct ExperimentOptions {
  std::string name;
  std::vector<std::size_t> n;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> m, d, count;
  std::optional<double> lambda;
  std::optional<std::size_t> samples, fp_samples;
  std::uint64_t seed = 1;
  std::string out;
};

struct Scan {
  std::string family;
  std::vector<std::size_t> grid;  // n, or dim for gauss
  std::size_t m = 0, d = 0, count = 0;
  double lambda = 0;
  std::size_t samples = 0, fp_samples = 0;
  bool giant = false;
};

// Defaults keep every cell near a minute on one core.
Scan default_scan(const std::string& name) {
  if (name == "gn-scan") return {"gn", {9, 16, 25, 36}, 0, 0, 0, 0, 100'000, 100'000, false};
  if (name == "hmn-scan") return {"hmn", {50, 100, 200}, 4, 0, 0, 0, 100'000, 100'000, false};
  if (name == "rrg-scan") return {"rrg", {250, 500, 1000, 2000}, 0, 3, 0, 0, 20'000, 100'000, false};
  if (name == "er-scan") return {"er", {1000, 2000, 4000}, 0, 0, 0, 5.0, 20'000, 100'000, true};
  if (name == "gauss-scan") return {"gauss", {2, 10, 100, 1000}, 0, 0, 200, 0, 10'000, 10'000, false};
  throw usage("unknown experiment '" + name + "'");
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

int cmd_experiment(const ExperimentOptions& o) {
  Scan scan = default_scan(o.name);
  if (scan.family == "gauss" ? !o.dims.empty() : !o.n.empty()) scan.grid = scan.family == "gauss" ? o.dims : o.n;
  if (o.m) scan.m = *o.m;
  if (o.d) scan.d = *o.d;
  if (o.count) scan.count = *o.count;
  if (o.lambda) scan.lambda = *o.lambda;
  if (o.samples) scan.samples = *o.samples;
  if (o.fp_samples) scan.fp_samples = *o.fp_samples;
  require(!scan.grid.empty(), "the parameter grid is empty");
  require(scan.samples > 0 || scan.fp_samples > 0, "samples must be at least 1");

  std::ostringstream csv;
  csv << "scan,n,d,M,lambda,dim,count,vertices,edges,giant_fraction,diameter,"
         "fp_mean,fp_se,slim_mean,slim_se,thin_mean,thin_se,minsize_mean,minsize_se,insize_mean,insize_se,"
         "samples,fp_samples,seed,wall_ms,error\n";
  for (std::size_t value : scan.grid) {
    SourceOptions src;
    src.family = scan.family;
    src.seed = o.seed;
    src.giant = scan.giant;
    src.m = scan.m;
    src.d = scan.d;
    src.lambda = scan.lambda;
    src.count = scan.count;
    if (scan.family == "gauss") {
      src.dim = value;
    } else {
      src.n = value;
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    AvgReport rep;
    std::size_t vertices = 0, edges = 0;
    double fraction = 1;
    try {
      Source s = load_source(src, true);
      if (s.cloud) {
        rep = estimate_cloud_triangles(*s.cloud, scan.samples, triangle_seed(o.seed));
        rep.fp = estimate_avg_fp(*s.cloud, VertexDistribution::uniform(s.cloud->size()),
                                 {scan.fp_samples, o.seed, 0, false});
        rep.diameter = s.cloud->diameter();
        vertices = s.cloud->size();
      } else {
        const GraphMetric m(s.graph);
        rep = estimate_avg(m, VertexDistribution::uniform(m.size()), scan.fp_samples, scan.samples, o.seed);
        vertices = s.graph.vertex_count();
        edges = s.graph.edge_count();
        fraction = s.descriptor.value("giant_fraction", 1.0);
      }
    } catch (const std::exception& e) {
      error = e.what();
      for (char& c : error)
        if (c == ',' || c == '\n') c = ';';
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto cell = [](const std::optional<Estimate>& e) {
      return e ? csv_number(e->mean) + "," + csv_number(e->std_error) : std::string(",");
    };
    const bool gauss = scan.family == "gauss";
    csv << o.name << ',' << (gauss ? "" : std::to_string(value)) << ','
        << (scan.family == "rrg" ? std::to_string(scan.d) : "") << ','
        << (scan.family == "hmn" ? std::to_string(scan.m) : "") << ','
        << (scan.family == "er" ? csv_number(scan.lambda) : "") << ',' << (gauss ? std::to_string(value) : "")
        << ',' << (gauss ? std::to_string(scan.count) : "") << ',' << vertices << ',' << edges << ','
        << csv_number(fraction) << ',' << csv_number(rep.diameter) << ',' << cell(rep.fp) << ',' << cell(rep.slim)
        << ',' << cell(rep.thin) << ',' << cell(rep.minsize) << ',' << cell(rep.insize) << ',' << scan.samples
        << ',' << scan.fp_samples << ',' << o.seed << ',' << csv_number(ms) << ',' << error << '\n';
    std::cerr << o.name << ": cell " << value << " done in " << std::fixed << std::setprecision(1) << ms / 1000
              << " s" << (error.empty() ? "" : " (error: " + error + ")") << '\n';
  }
  emit(o.out, csv.str());
  return 0;
}

// audit --------------------------------------------------------------------

struct AuditOptions {
  std::vector<std::string> graphs;
  std::string fixtures;
  std::size_t exhaustive_small = 0;
  bool models = false;
  std::size_t samples = 100'000;
  std::uint64_t seed = 1;
  bool corrupt = false;
  std::size_t exact_limit = 10;
  std::string json;
};

void audit_graph(AuditReport& rep, const Graph& g, const std::string& name, const AuditOptions& o,
                 std::size_t samples) {
  auto d = apsp(g);
  if (o.corrupt && d.size() >= 2) {
    // test hook: stretch one distance so the matrix stops being a metric
    const auto far = static_cast<Vertex>(d.size() - 1);
    d.row(0)[far] = static_cast<std::uint16_t>(d.hops(0, far) + 3);
  }
  audit_metric(rep, d, d.size() <= 60 ? 0 : 200'000, o.seed, name);
  if (!is_connected(g)) return;
  const GraphMetric m(g);
  rep.merge(audit_sampled(m, samples, o.seed, name));
  if (g.vertex_count() <= o.exact_limit) {
    audit_worst_case(rep, worst_case_measures(g), name);
    const auto dist = VertexDistribution::uniform(m.size());
    audit_averages(rep, exact_avg_fp(m, dist), exact_avg_triangles(g, m, dist), name);
  }
}

int cmd_audit(const AuditOptions& o) {
  require(!o.graphs.empty() || !o.fixtures.empty() || o.exhaustive_small > 0 || o.models,
          "nothing to audit: give graph files, --fixtures, --exhaustive-small or --models");
  require(o.exhaustive_small <= 8, "--exhaustive-small supports at most 8 vertices");
  AuditReport rep;
  std::size_t witnesses_checked = 0, witnesses_failed = 0;
  if (o.exhaustive_small > 0) rep.merge(audit_exhaustive_small(o.exhaustive_small));
  for (const auto& path : o.graphs) audit_graph(rep, load_graph_file(path), path, o, o.samples);
  if (!o.fixtures.empty()) {
    require(fs::is_directory(o.fixtures), o.fixtures + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(o.fixtures)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      if (p.extension() == ".edges") {
        audit_graph(rep, load_graph_file(p.string()), p.string(), o, std::min<std::size_t>(o.samples, 2000));
      } else if (p.extension() == ".json" && p.parent_path().filename() == "witness") {
        std::ifstream in(p);
        const auto w = witness_from_json(Json::parse(in));
        ++witnesses_checked;
        const bool ok = verify_witness(w);
        witnesses_failed += !ok;
        rep.record("witness.verified", ok, p.string());
      }
    }
  }
  if (o.models) {
    const std::size_t each = o.samples / 4;
    const auto er = giant_component(gen_er(1000, 5, o.seed)).giant;
    const std::vector<std::pair<std::string, Graph>> models = {{"G_25", gen_Gn(25).graph},
                                                               {"H_3,40", gen_HMn(3, 40).graph},
                                                               {"RRG(500,3)", gen_rrg(500, 3, o.seed)},
                                                               {"ER-giant(1000,5)", er}};
    for (const auto& [name, g] : models) {
      const GraphMetric m(g);
      rep.merge(audit_sampled(m, each, o.seed, name));
    }
  }
  emit(o.json, audit_report_json(rep).dump(2) + "\n");
  std::ostream& log = o.json.empty() || o.json == "-" ? std::cerr : std::cout;
  std::uint64_t checked = 0;
  for (const auto& [id, c] : rep.checks()) checked += c.checked;
  log << "audit: " << checked << " checks, " << rep.violation_count() << " violations";
  if (witnesses_checked) log << ", " << witnesses_checked - witnesses_failed << "/" << witnesses_checked << " witnesses verified";
  log << '\n';
  if (!rep.passed()) {
    for (const auto& [id, c] : rep.checks())
      for (const auto& v : c.violations) std::cerr << "violation " << id << ": " << v << '\n';
    return static_cast<int>(ExitCode::kAuditViolation);
  }
  return 0;
}

// witness ------------------------------------------------------------------

struct WitnessOptions {
  std::string kind;
  int param = 6;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  std::string out;
  std::string edges;
  std::string verify;
};

int cmd_witness(const WitnessOptions& o) {
  if (!o.verify.empty()) {
    std::ifstream in(o.verify);
    require(static_cast<bool>(in), "cannot open " + o.verify);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(0, e.what());
    }
    const auto w = witness_from_json(doc);
    const bool ok = verify_witness(w);
    std::cout << o.verify << ": " << (ok ? "verified" : "NOT verified") << '\n';
    return ok ? 0 : static_cast<int>(ExitCode::kAuditViolation);
  }
  require(!o.kind.empty(), "--kind is required");
  const auto kind = parse_witness_kind(o.kind);
  require(kind.has_value(), "unknown witness kind '" + o.kind + "'");
  const auto w = find_witness(*kind, o.budget, o.seed, o.param);
  emit(o.out, witness_json(w).dump(2) + "\n");
  if (!w.found) {
    std::cerr << o.kind << ": not found within a budget of " << o.budget << '\n';
    return static_cast<int>(ExitCode::kCapacity);
  }
  if (!o.edges.empty()) write_file_atomic(o.edges, edge_list_text(w.graph));
  (o.out.empty() ? std::cerr : std::cout)
      << o.kind << ": " << w.graph.vertex_count() << " vertices, slim " << w.report.slim << " thin " << w.report.thin
      << " minsize " << w.report.minsize << " insize " << w.report.insize << " after " << w.attempts
      << " attempts\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Worst-case and average hyperbolicity of graphs and point clouds"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (overrides HYPAVG_THREADS)");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "generate a graph or point cloud");
  add_family_options(g, gen.src);
  g->add_option("--out", gen.out, "output file (stdout when omitted)");

  MeasureOptions meas;
  auto* ms = app.add_subcommand("measure", "measure one triangle or worst-case values of a graph");
  ms->add_option("graph", meas.src.graph_file, "edge-list file");
  add_family_options(ms, meas.src);
  ms->add_option("--triangle", meas.triangle, "three corner ids, comma separated")->delimiter(',');
  ms->add_flag("--worst-case", meas.worst_case, "exhaustive suprema (small graphs)");
  ms->add_flag("--hyp", meas.hyp, "exact four-point hyperbolicity");
  ms->add_option("--geodesic-cap", meas.geodesic_cap, "geodesics per pair");
  ms->add_option("--json", meas.json, "output file");

  EstimateOptions est;
  auto* es = app.add_subcommand("estimate", "average hyperbolicity measures");
  es->add_option("graph", est.src.graph_file, "edge-list file");
  add_family_options(es, est.src);
  es->add_option("--dist", est.dist_file, "vertex weights, one 'vertex weight' per line");
  es->add_option("--samples", est.samples, "sampled triangles");
  es->add_option("--fp-samples", est.fp_samples, "sampled quadruples (default: --samples)");
  es->add_flag("--exact", est.exact, "exact rational averages by enumeration");
  es->add_option("--geodesic-cap", est.geodesic_cap, "geodesics per pair for --exact");
  es->add_option("--json", est.json, "output file (stdout when omitted)");

  ExperimentOptions exp;
  auto* ex = app.add_subcommand("experiment", "run a parameter scan and write CSV");
  ex->add_option("--name", exp.name, "gn-scan, hmn-scan, rrg-scan, er-scan or gauss-scan")->required();
  ex->add_option("--n", exp.n, "sizes, comma separated")->delimiter(',');
  ex->add_option("--dim", exp.dims, "dimensions, comma separated")->delimiter(',');
  ex->add_option("--m", exp.m, "M (hmn)");
  ex->add_option("--d", exp.d, "degree (rrg)");
  ex->add_option("--lambda", exp.lambda, "mean degree (er)");
  ex->add_option("--count", exp.count, "points (gauss)");
  ex->add_option("--samples", exp.samples, "sampled triangles per cell");
  ex->add_option("--fp-samples", exp.fp_samples, "sampled quadruples per cell");
  ex->add_option("--seed", exp.seed, "random seed");
  ex->add_option("--out", exp.out, "CSV file (stdout when omitted)");

  AuditOptions aud;
  auto* au = app.add_subcommand("audit", "check the inequalities; exit 1 on any violation");
  au->add_option("graphs", aud.graphs, "edge-list files");
  au->add_option("--fixtures", aud.fixtures, "directory of .edges and witness .json fixtures");
  au->add_option("--exhaustive-small", aud.exhaustive_small, "every connected graph up to this many vertices");
  au->add_flag("--models", aud.models, "sampled triangles on G_25, H_3,40, RRG(500,3), ER-giant(1000,5)");
  au->add_option("--samples", aud.samples, "sampled triangles");
  au->add_option("--seed", aud.seed, "random seed");
  au->add_option("--exact-limit", aud.exact_limit, "vertex count up to which exact checks run");
  au->add_flag("--corrupt-distances", aud.corrupt, "test hook: corrupt one distance per graph");
  au->add_option("--json", aud.json, "output file (stdout when omitted)");

  WitnessOptions wit;
  auto* wi = app.add_subcommand("witness", "search for a tight example or verify one");
  wi->add_option("--kind", wit.kind, "slim1-thin4, minsize1-insize3 or fat-insize1");
  wi->add_option("--param", wit.param, "n for fat-insize1");
  wi->add_option("--budget", wit.budget, "triangles tried");
  wi->add_option("--seed", wit.seed, "random seed");
  wi->add_option("--out", wit.out, "witness JSON (stdout when omitted)");
  wi->add_option("--edges", wit.edges, "also write the graph as an edge list");
  wi->add_option("--verify", wit.verify, "verify a witness JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }
  if (threads > 0) setenv("HYPAVG_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*g) return cmd_gen(gen);
    if (*ms) return cmd_measure(meas);
    if (*es) return cmd_estimate(est);
    if (*ex) return cmd_experiment(exp);
    if (*au) return cmd_audit(aud);
    if (*wi) return cmd_witness(wit);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kUsage);
  }
  return 0;
}
