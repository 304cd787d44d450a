#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypavg {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected unweighted graph on vertices 0..n-1, stored as CSR
/// with sorted neighbor lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges (in either orientation)
  /// collapse; self-loops and out-of-range ids throw std::invalid_argument.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (min, max), in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Parses the edge-list format: one "u v" per line, '#' lines ignored.
/// Throws ParseError carrying the offending line number.
Graph load_graph(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

struct Components {
  std::vector<std::int32_t> component_of;  // component id per vertex
  std::vector<std::size_t> sizes;          // indexed by component id
  std::size_t count() const { return sizes.size(); }
};

/// Component ids are assigned in order of their smallest vertex.
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices`; new id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Small named graphs used by tests, fixtures and benchmarks.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph grid_graph(std::size_t rows, std::size_t cols);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube_graph(std::size_t dim);
Graph petersen_graph();

}  // namespace hypavg
