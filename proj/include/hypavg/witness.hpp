#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hypavg/geodesics.hpp"
#include "hypavg/graph.hpp"
#include "hypavg/triangle_measures.hpp"

namespace hypavg {

enum class WitnessKind {
  kSlim1Thin4,       // slim 1, thin 4
  kMinsize1Insize3,  // minsize 1, insize 3
  kFatInsize1,       // slim >= n/2, insize <= 1
};

std::string_view to_string(WitnessKind kind);
/// "slim1-thin4", "minsize1-insize3", "fat-insize1"; nullopt otherwise.
std::optional<WitnessKind> parse_witness_kind(std::string_view s);

struct Witness {
  WitnessKind kind = WitnessKind::kSlim1Thin4;
  int param = 0;  // n for fat-insize1
  bool found = false;
  std::uint64_t attempts = 0;
  Graph graph;
  GeodesicTriangle triangle;
  TriangleReport report;
};

/// Whether the measured values reach the target of the kind.
bool meets_target(WitnessKind kind, int param, const TriangleReport& r);

/// Segments are geodesics of the graph and measured values reach the target.
bool verify_witness(const Witness& w);

/// Best-effort search: fixed small families first, then random geometric
/// graphs with sampled triangles, each hit shrunk greedily by deleting
/// vertices and edges off the triangle. fat-insize1 is built from an even
/// cycle with two leaves at the antipode of a corner, scanning cycle lengths.
Witness find_witness(WitnessKind kind, std::uint64_t budget, std::uint64_t seed, int param = 6);

}  // namespace hypavg
