#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amac/pipeline.hpp"

namespace amac {

struct BenchRow {
  std::size_t size = 0;
  double best_seconds = 0.0;
  double ns_per_byte = 0.0;
};

/// Deterministic lowercase-and-space message of length n.
std::string make_bench_message(std::size_t n, std::uint64_t seed = 0x5eed);

/// Time amac_encode over synthetic messages; best of `reps` runs per size.
std::vector<BenchRow> run_benchmark(BhfKind kind,
                                    const std::vector<std::size_t>& sizes,
                                    int reps = 5);

/// The sizes the bench command reports: {1e4, 2e4, 1e5, 2e5}.
std::vector<std::size_t> default_bench_sizes();

}  // namespace amac
