#include "minortrace/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

namespace minortrace {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

BenchResult run_bench(const BenchConfig& config) {
  if (config.n < 16) throw Error(ErrorCode::PreconditionViolated, "bench needs n >= 16");
  if (config.reps < 3) throw Error(ErrorCode::PreconditionViolated, "bench needs reps >= 3");

  std::mt19937_64 rng(config.seed);
  const Matrix a = gen_structured(rng, config.ring, config.n, GenMode::Outer);
  const Matrix b = random_matrix(rng, config.ring, config.n, config.n);

  std::vector<double> naive_ms, fast_ms;
  bool equal = true;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    std::optional<Matrix> naive, fast;
    naive_ms.push_back(time_ms([&] { naive = naive_aba(a, b); }));
    fast_ms.push_back(time_ms([&] { fast = structured_aba(a, b, PreconditionCheck::Trust); }));
    equal = equal && *naive == *fast;
  }

  BenchResult r;
  r.n = config.n;
  r.ring = config.ring;
  r.reps = config.reps;
  r.naive_median_ms = median(naive_ms);
  r.fast_median_ms = median(fast_ms);
  r.speedup = r.fast_median_ms > 0 ? r.naive_median_ms / r.fast_median_ms : 0;
  r.agreement_checked = equal;
  return r;
}

io::Json bench_to_json(const BenchResult& r) {
  return io::Json{{"n", r.n},
                  {"ring", io::ring_to_json(r.ring)},
                  {"reps", r.reps},
                  {"naive_median_ms", r.naive_median_ms},
                  {"fast_median_ms", r.fast_median_ms},
                  {"speedup", r.speedup},
                  {"agreement_checked", r.agreement_checked}};
}

}  // namespace minortrace
