#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace hypavg {

// Worker count for OpenMP regions: HYPAVG_THREADS when set and positive,
// otherwise the OpenMP default. `requested` > 0 overrides both.
int thread_count(int requested = 0);

// Random engine used for every sampling stream.
using Engine = std::mt19937_64;

// Seed for the stream of sample `index` under `master`. Serial and parallel
// loops draw sample i from the same stream, so results do not depend on
// scheduling.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

inline Engine make_stream(std::uint64_t master, std::uint64_t index) {
  return Engine(stream_seed(master, index));
}

// Fixed-shape pairwise summation: the association order depends only on the
// length of the input.
double pairwise_sum(std::span<const double> values);

}  // namespace hypavg
