#include "amac/bench.hpp"

#include <chrono>
#include <random>

namespace amac {

std::string make_bench_message(std::size_t n, std::uint64_t seed) {
  static constexpr char kAlphabet[] = "abcdefghijklmnopqrstuvwxyz ";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sizeof(kAlphabet) - 2);
  std::string msg;
  msg.reserve(n);
  for (std::size_t i = 0; i < n; ++i) msg.push_back(kAlphabet[pick(rng)]);
  return msg;
}

std::vector<BenchRow> run_benchmark(BhfKind kind,
                                    const std::vector<std::size_t>& sizes,
                                    int reps) {
  const KeyPair keys{"bench primary key", "et"};
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t n : sizes) {
    std::string msg = make_bench_message(n);
    double best = 1e300;
    volatile double sink = 0.0;  // keep the encode from being elided
    for (int r = 0; r < reps; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      Tag tag = amac_encode(msg, keys, kind);
      auto t1 = std::chrono::steady_clock::now();
      sink = sink + tag.value;
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    rows.push_back(BenchRow{n, best, n == 0 ? 0.0 : best * 1e9 / double(n)});
  }
  return rows;
}

std::vector<std::size_t> default_bench_sizes() {
  return {10'000, 20'000, 100'000, 200'000};
}

}  // namespace amac
