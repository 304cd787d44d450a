#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hypavg/graph.hpp"

namespace hypavg {

/// Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 8).
/// Entry k holds the graphs on k vertices; entry 0 is empty.
std::vector<std::vector<Graph>> connected_graph_catalog(std::size_t max_n);

/// Canonical code of a graph on at most 8 vertices: the smallest
/// upper-triangle adjacency bitmask over relabelings consistent with
/// colour refinement. Isomorphic graphs share a code.
std::uint64_t canonical_code(const Graph& g);

}  // namespace hypavg
