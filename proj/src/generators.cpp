#include "hypavg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "hypavg/error.hpp"
#include "hypavg/parallel.hpp"

namespace hypavg {

std::size_t gn_chain_length(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return 2 * r + 1;
}

LabeledGraph gen_Gn(std::size_t n) {
  if (n < 3) throw std::invalid_argument("G_n needs n >= 3");
  const std::size_t m = gn_chain_length(n);
  LabeledGraph lg;
  for (std::size_t i = 1; i <= n; ++i) lg.labels.push_back("a" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vertex prev = static_cast<Vertex>(i);
      for (std::size_t k = 1; k <= m; ++k) {
        const auto v = static_cast<Vertex>(lg.labels.size());
        lg.labels.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(k));
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, static_cast<Vertex>(j));
    }
  }
  lg.graph = Graph::from_edges(lg.labels.size(), edges);
  return lg;
}

LabeledGraph gen_HMn(std::size_t M, std::size_t n) {
  if (M < 1) throw std::invalid_argument("H_{M,n} needs M >= 1");
  if (n < 2) throw std::invalid_argument("H_{M,n} needs n >= 2");
  LabeledGraph lg;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) lg.labels.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= M * n; ++s) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(lg.labels.size()));
      lg.labels.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(s));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      Vertex prev = static_cast<Vertex>(i);
      for (std::size_t k = 1; k <= 2 * M; ++k) {
        const auto v = static_cast<Vertex>(lg.labels.size());
        lg.labels.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j) + "_" + std::to_string(k));
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, static_cast<Vertex>(i + 1));
    }
  }
  lg.graph = Graph::from_edges(lg.labels.size(), edges);
  return lg;
}

Graph gen_rrg(std::size_t n, std::size_t d, std::uint64_t seed, const RrgOptions& opts) {
  if ((n * d) % 2 != 0) throw std::invalid_argument("n·d must be even");
  if (d >= n) throw std::invalid_argument("d must be smaller than n");
  if (d == 0) throw std::invalid_argument("d must be positive");
  Engine rng(seed);
  std::vector<Vertex> stubs(n * d);
  for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / d);
  std::vector<Edge> edges(stubs.size() / 2);
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool simple = true;
    for (std::size_t i = 0; i < edges.size() && simple; ++i) {
      const Vertex u = stubs[2 * i], v = stubs[2 * i + 1];
      if (u == v) simple = false;
      edges[i] = {std::min(u, v), std::max(u, v)};
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw CapacityError("no simple connected " + std::to_string(d) + "-regular pairing on " + std::to_string(n) +
                      " vertices within " + std::to_string(opts.max_attempts) + " attempts");
}

Graph gen_er(std::size_t n, double lambda, std::uint64_t seed) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  const double p = lambda / static_cast<double>(n);
  if (p > 1) throw std::invalid_argument("lambda/n must not exceed 1");
  std::vector<Edge> edges;
  if (p == 1) return complete_graph(n);
  // Geometric skipping over the pairs (v, w), w < v.
  Engine rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1, w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

double ComponentMap::fraction() const {
  return components.component_of.empty()
             ? 0.0
             : static_cast<double>(giant.vertex_count()) / static_cast<double>(components.component_of.size());
}

ComponentMap giant_component(const Graph& g) {
  ComponentMap cm;
  cm.components = connected_components(g);
  const auto& sizes = cm.components.sizes;
  // ids follow smallest vertex, so the first maximum wins ties
  if (!sizes.empty()) cm.giant_id = static_cast<std::int32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  cm.to_giant.assign(g.vertex_count(), -1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (cm.components.component_of[v] == cm.giant_id) {
      cm.to_giant[v] = static_cast<Vertex>(cm.to_original.size());
      cm.to_original.push_back(static_cast<Vertex>(v));
    }
  }
  cm.giant = induced_subgraph(g, cm.to_original);
  return cm;
}

void write_labels(std::ostream& out, const LabeledGraph& lg) {
  for (std::size_t v = 0; v < lg.labels.size(); ++v) out << v << ' ' << lg.labels[v] << '\n';
}

}  // namespace hypavg
