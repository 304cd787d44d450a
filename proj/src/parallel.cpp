#include "hypavg/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace hypavg {

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPAVG_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over a combination of the two inputs
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0;
    for (double v : values) s += v;
    return s;
  }
  const auto half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace hypavg
