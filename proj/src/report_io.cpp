#include "hypavg/report_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hypavg/error.hpp"

namespace hypavg {

namespace {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json half_int(HalfInt h) {
  if (h.is_integer()) return h.twice() / 2;
  return h.to_double();
}

Json report_json(const TriangleReport& r) {
  return {{"slim", r.slim}, {"thin", r.thin}, {"minsize", r.minsize}, {"insize", half_int(r.insize)},
          {"degenerate", r.degenerate}};
}

Json path_json(const GeodesicSegment& s) { return s.vertices; }

GeodesicSegment segment_from(const Json& j) {
  GeodesicSegment s;
  s.vertices = j.get<std::vector<Vertex>>();
  if (s.vertices.empty()) throw ParseError(0, "witness side is empty");
  s.from = s.vertices.front();
  s.to = s.vertices.back();
  return s;
}

}  // namespace

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Json to_json(const Estimate& e) {
  return {{"mean", number(e.mean)},
          {"std_error", number(e.std_error)},
          {"ci95", {number(e.ci95_lo), number(e.ci95_hi)}},
          {"hoeffding99", number(e.hoeffding99)},
          {"bound", number(e.bound)},
          {"samples", e.samples},
          {"seed", e.seed},
          {"exact", e.exact}};
}

Json avg_report_json(const AvgReport& r, const Json& graph, const Json& distribution, const ExactAverages* exact) {
  Json q = Json::object();
  auto put = [&](const char* name, const std::optional<Estimate>& e, const std::optional<Rational>* x) {
    if (!e) return;
    Json v = to_json(*e);
    if (x && *x) v["exact_value"] = rational_string(**x);
    q[name] = std::move(v);
  };
  put("fp", r.fp, exact ? &exact->fp : nullptr);
  put("slim", r.slim, exact ? &exact->slim : nullptr);
  put("thin", r.thin, exact ? &exact->thin : nullptr);
  put("minsize", r.minsize, exact ? &exact->minsize : nullptr);
  put("insize", r.insize, exact ? &exact->insize : nullptr);
  return {{"schema", kAvgReportSchema},
          {"graph", graph},
          {"distribution", distribution},
          {"exact", r.exact},
          {"quantities", q},
          {"samples", {{"fp", r.fp_samples}, {"triangles", r.triangle_samples}}},
          {"seed", r.seed},
          {"diameter", r.diameter},
          {"wall_time_ms", r.wall_time_ms}};
}

Json audit_report_json(const AuditReport& r) {
  Json checks = Json::array();
  for (const auto& [id, c] : r.checks()) {
    checks.push_back({{"id", id}, {"checked", c.checked}, {"failed", r.failures(id)}, {"violations", c.violations}});
  }
  return {{"schema", kAuditReportSchema},
          {"passed", r.passed()},
          {"violation_count", r.violation_count()},
          {"checks", checks}};
}

Json witness_json(const Witness& w) {
  Json doc = {{"schema", kWitnessSchema},
              {"kind", std::string(to_string(w.kind))},
              {"param", w.param},
              {"found", w.found},
              {"attempts", w.attempts}};
  if (!w.found) return doc;
  doc["vertex_count"] = w.graph.vertex_count();
  Json edges = Json::array();
  for (const auto& [a, b] : w.graph.edges()) edges.push_back({a, b});
  doc["edges"] = edges;
  doc["triangle"] = {{"corners", {w.triangle.x, w.triangle.y, w.triangle.z}},
                     {"xy", path_json(w.triangle.xy)},
                     {"yz", path_json(w.triangle.yz)},
                     {"zx", path_json(w.triangle.zx)}};
  doc["measures"] = report_json(w.report);
  return doc;
}

Witness witness_from_json(const Json& doc) {
  try {
    Witness w;
    const auto kind = parse_witness_kind(doc.at("kind").get<std::string>());
    if (!kind) throw ParseError(0, "unknown witness kind");
    w.kind = *kind;
    w.param = doc.at("param").get<int>();
    w.found = doc.at("found").get<bool>();
    w.attempts = doc.value("attempts", std::uint64_t{0});
    if (!w.found) return w;
    const auto n = doc.at("vertex_count").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    w.graph = Graph::from_edges(n, edges);
    const auto& t = doc.at("triangle");
    w.triangle = make_triangle(segment_from(t.at("xy")), segment_from(t.at("yz")), segment_from(t.at("zx")));
    const auto& m = doc.at("measures");
    w.report.slim = m.at("slim").get<int>();
    w.report.thin = m.at("thin").get<int>();
    w.report.minsize = m.at("minsize").get<int>();
    w.report.insize = HalfInt::from_twice(std::llround(2 * m.at("insize").get<double>()));
    w.report.degenerate = m.value("degenerate", false);
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("witness document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("witness document: ") + e.what());
  }
}

VertexDistribution load_distribution(std::istream& in, std::size_t vertex_count) {
  std::vector<double> w(vertex_count, 0.0);
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    long long v = -1;
    double x = 0;
    std::size_t used = 0;
    try {
      v = std::stoll(first, &used);
    } catch (const std::exception&) {
      throw ParseError(no, "expected a vertex id");
    }
    if (used != first.size() || v < 0 || static_cast<std::size_t>(v) >= vertex_count) {
      throw ParseError(no, "vertex id out of range");
    }
    std::string rest;
    if (!(ls >> x) || (ls >> rest)) throw ParseError(no, "expected 'vertex weight'");
    if (!(x >= 0) || !std::isfinite(x)) throw ParseError(no, "weight must be finite and nonnegative");
    w[static_cast<std::size_t>(v)] = x;
  }
  return VertexDistribution(std::move(w));
}

VertexDistribution load_distribution_file(const std::string& path, std::size_t vertex_count) {
  std::ifstream in(path);
  if (!in) throw Error(ExitCode::kUsage, "cannot open " + path);
  return load_distribution(in, vertex_count);
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ExitCode::kUsage, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ExitCode::kUsage, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ExitCode::kUsage, "cannot rename onto " + path + ": " + ec.message());
}

}  // namespace hypavg
