#include "hypavg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hypavg/error.hpp"

namespace hypavg {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
        static_cast<std::size_t>(v) >= vertex_count) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(vertex_count) +
                                  " vertices");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (auto [u, v] : directed) ++g.offsets_[u + 1];
  for (std::size_t i = 0; i < vertex_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.reserve(directed.size());
  for (auto [u, v] : directed) g.targets_.push_back(v);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

namespace {

bool parse_id(std::string_view token, Vertex& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  long long value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0 || value > INT32_MAX - 1) return false;
  out = static_cast<Vertex>(value);
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::vector<Edge> edges;
  Vertex max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ParseError(line_no, "expected two vertex ids, got '" + line + "'");
    }
    Vertex u = 0, v = 0;
    if (!parse_id(a, u) || !parse_id(b, v)) {
      throw ParseError(line_no, "vertex ids must be nonnegative integers, got '" + line + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop '" + line + "'");
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  return Graph::from_edges(static_cast<std::size_t>(max_id + 1), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open graph file '" + path + "'");
  return load_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Components connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  Components c;
  c.component_of.assign(n, -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (c.component_of[s] >= 0) continue;
    const auto id = static_cast<std::int32_t>(c.sizes.size());
    std::size_t size = 0;
    c.component_of[s] = id;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(u)) {
        if (c.component_of[w] < 0) {
          c.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    c.sizes.push_back(size);
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> new_id(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) new_id[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (new_id[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), new_id[w]);
    }
  }
  return Graph::from_edges(vertices.size(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph hypercube_graph(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t b = 0; b < dim; ++b)
      if (!(v & (std::size_t{1} << b))) e.emplace_back(v, v | (std::size_t{1} << b));
  return Graph::from_edges(n, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

}  // namespace hypavg
