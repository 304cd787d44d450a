#include "hypavg/graph_metric.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hypavg {

GraphMetric::GraphMetric(const Graph& g, const ApspOptions& options) {
  const auto n = g.vertex_count();
  std::vector<std::int32_t> degree(n);
  std::vector<Vertex> parent(n, -1);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;  // removal order
  std::vector<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::int32_t>(g.degree(static_cast<Vertex>(v)));
    if (degree[v] <= 1) queue.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (removed[v] || degree[v] != 1) continue;  // degree 0: last vertex of a tree, stays as core
    Vertex u = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) {
        u = w;
        break;
      }
    }
    removed[v] = 1;
    parent[v] = u;
    order.push_back(v);
    if (--degree[u] <= 1) queue.push_back(u);
  }

  auto& core_vertices = core_vertices_;
  slot_.assign(n, -1);
  depth_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) {
      slot_[v] = static_cast<Vertex>(core_vertices.size());
      core_vertices.push_back(static_cast<Vertex>(v));
    }
  }
  core_graph_ = induced_subgraph(g, core_vertices);
  core_ = apsp(core_graph_, options);
  connected_ = core_.connected();

  int max_depth = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    slot_[v] = slot_[parent[v]];
    depth_[v] = depth_[parent[v]] + 1;
    max_depth = std::max(max_depth, depth_[v]);
  }

  if (max_depth > 0) {
    const int levels = std::bit_width(static_cast<unsigned>(max_depth));
    up_.assign(levels, std::vector<Vertex>(n));
    for (std::size_t v = 0; v < n; ++v) up_[0][v] = removed[v] ? parent[v] : static_cast<Vertex>(v);
    for (int k = 1; k < levels; ++k)
      for (std::size_t v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
  }
  compute_diameter(g, order);
}

double GraphMetric::distance(std::size_t i, std::size_t j) const {
  const int h = hops(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h == kUnreachable ? std::numeric_limits<double>::infinity() : h;
}

int GraphMetric::tree_hops(Vertex u, Vertex v) const {
  int du = depth_[u], dv = depth_[v];
  const int total = du + dv;
  if (du < dv) {
    std::swap(u, v);
    std::swap(du, dv);
  }
  for (int k = 0, diff = du - dv; diff; ++k, diff >>= 1)
    if (diff & 1) u = up_[k][u];
  if (u == v) return total - 2 * dv;
  for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
    if (up_[k][u] != up_[k][v]) {
      u = up_[k][u];
      v = up_[k][v];
    }
  }
  const Vertex lca = up_[0][u];
  return total - 2 * depth_[lca];
}

void GraphMetric::compute_diameter(const Graph& g, const std::vector<Vertex>& order) {
  // Heights of pendant trees and the longest path inside each of them.
  const auto n = g.vertex_count();
  std::vector<int> down1(n, 0), down2(n, 0);
  std::vector<int> inside(core_.size(), 0);
  std::vector<Vertex> parent_of(n, -1);
  if (!up_.empty()) parent_of = up_[0];
  for (Vertex v : order) {  // leaves first
    const Vertex p = parent_of[v];
    inside[slot_[v]] = std::max(inside[slot_[v]], down1[v] + down2[v]);
    const int h = down1[v] + 1;
    if (h > down1[p]) {
      down2[p] = down1[p];
      down1[p] = h;
    } else if (h > down2[p]) {
      down2[p] = h;
    }
  }
  std::vector<int> height(core_.size(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (depth_[v] == 0) {
      height[slot_[v]] = down1[v];
      inside[slot_[v]] = std::max(inside[slot_[v]], down1[v] + down2[v]);
    }
  }
  int best = 0;
  const auto k = core_.size();
  for (std::size_t a = 0; a < k; ++a) {
    best = std::max(best, inside[a]);
    const auto row = core_.row(static_cast<Vertex>(a));
    for (std::size_t b = a + 1; b < k; ++b) {
      if (row[b] == DistanceMatrix::kSentinel) continue;
      best = std::max(best, height[a] + height[b] + row[b]);
    }
  }
  diameter_ = best;
}

}  // namespace hypavg
