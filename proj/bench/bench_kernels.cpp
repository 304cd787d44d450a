#include <benchmark/benchmark.h>

#include <map>

#include "hypavg/diagnostics.hpp"
#include "hypavg/estimators.hpp"
#include "hypavg/exact.hpp"
#include "hypavg/generators.hpp"
#include "hypavg/reference.hpp"

using namespace hypavg;

namespace {

const Graph& rrg(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_rrg(n, 3, 1)).first;
  return it->second;
}

// Sampled estimators: OpenMP kernels against the serial loop over the same streams.

void BM_FpParallel(benchmark::State& state) {
  const GraphMetric m(rrg(1000));
  const auto dist = VertexDistribution::uniform(m.size());
  const EstimatorOptions opts{static_cast<std::size_t>(state.range(0)), 1, 0, false};
  for (auto _ : state) benchmark::DoNotOptimize(estimate_avg_fp(m, dist, opts).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FpSerial(benchmark::State& state) {
  const GraphMetric m(rrg(1000));
  const auto dist = VertexDistribution::uniform(m.size());
  const EstimatorOptions opts{static_cast<std::size_t>(state.range(0)), 1, 0, false};
  for (auto _ : state) benchmark::DoNotOptimize(ref::serial_avg_fp(m, dist, opts).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrianglesParallel(benchmark::State& state) {
  const GraphMetric m(rrg(1000));
  const auto dist = VertexDistribution::uniform(m.size());
  const EstimatorOptions opts{static_cast<std::size_t>(state.range(0)), 1, 0, false};
  for (auto _ : state) benchmark::DoNotOptimize(estimate_avg_triangles(m, dist, opts).slim->mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrianglesSerial(benchmark::State& state) {
  const GraphMetric m(rrg(1000));
  const auto dist = VertexDistribution::uniform(m.size());
  const EstimatorOptions opts{static_cast<std::size_t>(state.range(0)), 1, 0, false};
  for (auto _ : state) benchmark::DoNotOptimize(ref::serial_avg_triangles(m, dist, opts).slim->mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// Exact kernels against the naive definitions.

void BM_ApspBfs(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apsp(g).diameter());
}

void BM_ApspFloydWarshall(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ref::apsp(g).size());
}

void BM_HypExact(benchmark::State& state) {
  const auto d = apsp(rrg(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hyp_exact(d).value);
}

void BM_HypNaive(benchmark::State& state) {
  const auto d = ref::apsp(rrg(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ref::hyp_twice(d));
}

void BM_WorstCase(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(worst_case_measures(g).slim);
}

void BM_WorstCaseNaive(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ref::worst_case(g).max.slim);
}

void BM_ExactTriangles(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  const GraphMetric m(g);
  const auto dist = VertexDistribution::uniform(m.size());
  for (auto _ : state) benchmark::DoNotOptimize(exact_avg_triangles(g, m, dist).slim);
}

void BM_ExactTrianglesNaive(benchmark::State& state) {
  const auto& g = rrg(static_cast<std::size_t>(state.range(0)));
  const auto d = ref::apsp(g);
  const std::vector<Rational> w(g.vertex_count(), Rational(1, g.vertex_count()));
  for (auto _ : state) benchmark::DoNotOptimize(ref::avg_triangles(g, d, w).slim);
}

void BM_Traffic(benchmark::State& state) {
  const auto d = apsp(rrg(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(traffic_all(d).size());
}

}  // namespace

BENCHMARK(BM_FpParallel)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FpSerial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesParallel)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrianglesSerial)->Arg(10'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApspBfs)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApspFloydWarshall)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypExact)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypNaive)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WorstCase)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WorstCaseNaive)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactTriangles)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactTrianglesNaive)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Traffic)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
