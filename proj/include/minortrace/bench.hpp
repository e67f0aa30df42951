#pragma once

#include <cstdint>

#include "minortrace/io.hpp"

namespace minortrace {

/// 2^61 - 1; residues stay one machine word wide.
inline const char* const kDefaultBenchModulus = "2305843009213693951";

struct BenchConfig {
  std::size_t n = 256;
  Ring ring = Ring::modular(Integer(kDefaultBenchModulus));
  std::size_t reps = 5;
  std::uint64_t seed = 1;
};

struct BenchResult {
  std::size_t n = 0;
  Ring ring = Ring::integers();
  std::size_t reps = 0;
  double naive_median_ms = 0;
  double fast_median_ms = 0;
  double speedup = 0;
  /// True iff naive and fast outputs were compared and were equal.
  bool agreement_checked = false;
};

/// Times naive_aba against structured_aba (precondition trusted) on one
/// outer-product A and a random B, single-threaded. Requires n >= 16 and
/// reps >= 3.
BenchResult run_bench(const BenchConfig& config);

io::Json bench_to_json(const BenchResult& r);

}  // namespace minortrace
