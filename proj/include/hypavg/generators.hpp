#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypavg/graph.hpp"

namespace hypavg {

/// A graph whose vertices carry role labels ("a1", "b1_2_3", "c4", ...).
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// n hubs a_i joined pairwise by chains of m = 2 floor(sqrt n) + 1 interior
/// vertices b_ijk. Throws std::invalid_argument for n < 3.
LabeledGraph gen_Gn(std::size_t n);
std::size_t gn_chain_length(std::size_t n);

/// Junctions c_1..c_n, M*n leaves a_is on each junction, and two disjoint
/// paths with 2M interior vertices b_ijk between consecutive junctions.
/// Throws std::invalid_argument for M < 1 or n < 2.
LabeledGraph gen_HMn(std::size_t M, std::size_t n);

struct RrgOptions {
  std::size_t max_attempts = 100000;  // whole pairings tried
};

/// Random simple d-regular graph: configuration-model pairings, restarted
/// from scratch on any loop, multi-edge or disconnected result.
/// Throws std::invalid_argument on odd n*d or d >= n, and CapacityError
/// when the attempt budget runs out.
Graph gen_rrg(std::size_t n, std::size_t d, std::uint64_t seed, const RrgOptions& opts = {});

/// G(n, lambda/n). Throws std::invalid_argument when lambda <= 0 or
/// lambda/n > 1.
Graph gen_er(std::size_t n, double lambda, std::uint64_t seed);

struct ComponentMap {
  Components components;
  std::int32_t giant_id = -1;
  Graph giant;                     // induced on the largest component
  std::vector<Vertex> to_original; // new id -> original id
  std::vector<Vertex> to_giant;    // original id -> new id, -1 outside
  double fraction() const;
};

/// Largest component; ties go to the component with the smallest vertex.
ComponentMap giant_component(const Graph& g);

/// One "id role" line per vertex.
void write_labels(std::ostream& out, const LabeledGraph& lg);

}  // namespace hypavg
