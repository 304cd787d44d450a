#include "hypavg/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hypavg {

namespace {

constexpr std::size_t kMaxN = 8;

struct Small {
  int n = 0;
  std::array<std::uint8_t, kMaxN> adj{};
};

// Refined colour classes, in an order fixed by their invariants.
std::vector<std::vector<int>> refine(const Small& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = std::popcount(g.adj[v]);
  for (;;) {
    std::map<std::vector<int>, int> rank;
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u)
        if (g.adj[v] >> u & 1) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      rank.emplace(sig[v], 0);
    }
    int r = 0;
    for (auto& [k, val] : rank) val = r++;
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) next[v] = rank[sig[v]];
    const auto classes = [](const std::vector<int>& c) {
      return std::set<int>(c.begin(), c.end()).size();
    };
    const bool stable = classes(next) == classes(color);
    color = std::move(next);
    if (stable) break;
  }
  std::vector<std::vector<int>> cells(*std::max_element(color.begin(), color.end()) + 1);
  for (int v = 0; v < g.n; ++v) cells[color[v]].push_back(v);
  return cells;
}

std::uint64_t code_of(const Small& g, const std::array<int, kMaxN>& label) {
  // label[v] = new position of v
  std::array<int, kMaxN> at{};
  for (int v = 0; v < g.n; ++v) at[label[v]] = v;
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++bit)
      if (g.adj[at[i]] >> at[j] & 1) code |= std::uint64_t{1} << bit;
  return code;
}

std::uint64_t canonical(const Small& g) {
  auto cells = refine(g);
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::uint64_t best = ~std::uint64_t{0};
  // odometer over the permutations of every cell
  for (;;) {
    std::array<int, kMaxN> label{};
    int pos = 0;
    for (const auto& c : cells)
      for (int v : c) label[v] = pos++;
    best = std::min(best, code_of(g, label));
    std::size_t k = 0;
    while (k < cells.size() && !std::next_permutation(cells[k].begin(), cells[k].end())) ++k;
    if (k == cells.size()) break;
  }
  return best;
}

Small from_graph(const Graph& g) {
  if (g.vertex_count() > kMaxN) throw std::invalid_argument("canonical codes cover at most 8 vertices");
  Small s;
  s.n = static_cast<int>(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    s.adj[u] |= std::uint8_t(1u << v);
    s.adj[v] |= std::uint8_t(1u << u);
  }
  return s;
}

Graph to_graph(const Small& s) {
  std::vector<Edge> edges;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.adj[u] >> v & 1) edges.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(s.n), edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical(from_graph(g)); }

std::vector<std::vector<Graph>> connected_graph_catalog(std::size_t max_n) {
  if (max_n > kMaxN) throw std::invalid_argument("the catalog covers at most 8 vertices");
  std::vector<std::vector<Graph>> out(max_n + 1);
  if (max_n == 0) return out;
  // Every connected graph has a vertex whose removal keeps it connected, so
  // adding one vertex with a nonempty neighbourhood reaches all of them.
  std::vector<Small> level(1);
  level[0].n = 1;
  out[1].push_back(to_graph(level[0]));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Small> next;
    for (const auto& g : level) {
      for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        Small h = g;
        h.n = g.n + 1;
        h.adj[g.n] = static_cast<std::uint8_t>(mask);
        for (int u = 0; u < g.n; ++u)
          if (mask >> u & 1) h.adj[u] |= std::uint8_t(1u << g.n);
        if (seen.insert(canonical(h)).second) next.push_back(h);
      }
    }
    for (const auto& h : next) out[n].push_back(to_graph(h));
    level = std::move(next);
  }
  return out;
}

}  // namespace hypavg
