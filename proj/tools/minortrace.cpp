// minortrace: command-line front end.
//
// Exit codes: 0 success / structured / identity holds, 1 witness found or
// identity violated, 2 input or parameter error, 3 structure precondition
// failed (a probe witness is printed). JSON goes to stdout, human-readable
// notes to stderr. Reported row/column numbers are 1-based.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minortrace/bench.hpp"
#include "minortrace/io.hpp"

namespace mt = minortrace;
using mt::io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;
constexpr int kStructureFailed = 3;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw mt::Error(mt::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

mt::Matrix load_matrix(const std::string& path) { return mt::io::matrix_from_json(mt::io::parse(read_source(path))); }

void emit(const Json& j) { std::cout << mt::io::dump(j) << '\n'; }

// MINORTRACE_CHECK=0 trusts callers of the fast kernels; anything else checks.
mt::PreconditionCheck precondition_mode() {
  const char* env = std::getenv("MINORTRACE_CHECK");
  if (env != nullptr && std::string(env) == "0") return mt::PreconditionCheck::Trust;
  return mt::PreconditionCheck::Enforce;
}

int structure_failure(const mt::Matrix& a) {
  auto report = mt::probe_converse(a);
  emit(mt::io::probe_report_to_json(report));
  std::cerr << "A has a nonzero 2x2 minor; the fast path does not apply\n";
  return kStructureFailed;
}

int cmd_check(const std::string& path) {
  const auto a = load_matrix(path);
  const auto verdict = mt::check_vanishing_minors(a);
  emit(mt::io::verdict_to_json(verdict));
  if (verdict.structured) return kOk;
  const auto& idx = verdict.witness->index;
  std::cerr << "nonzero minor at rows (" << idx.i + 1 << "," << idx.j + 1 << ") cols (" << idx.k + 1 << ","
            << idx.l + 1 << "): " << verdict.witness->value.str() << '\n';
  return kViolated;
}

enum class VerifyMode { Fast, Naive, Both };

int cmd_verify(const std::string& path_a, const std::string& path_b, VerifyMode mode) {
  const auto a = load_matrix(path_a);
  const auto b = load_matrix(path_b);
  const auto check = precondition_mode();

  if (mode == VerifyMode::Naive) {
    const auto aba = mt::naive_aba(a, b);
    const auto residual = mt::verify_identity(a, b);
    const bool holds = residual.is_zero();
    emit(Json{{"aba", mt::io::matrix_to_json(aba)}, {"residual", mt::io::matrix_to_json(residual)}, {"holds", holds}});
    if (!holds) std::cerr << "ABA != Tr(AB) A for this pair\n";
    return holds ? kOk : kViolated;
  }

  mt::Matrix fast = a;
  try {
    fast = mt::structured_aba(a, b, check);
  } catch (const mt::StructureError&) {
    return structure_failure(a);
  }
  const auto t = mt::trace_of_product(a, b);
  if (mode == VerifyMode::Fast) {
    emit(Json{{"trace", mt::io::elem_to_json(t)}, {"result", mt::io::matrix_to_json(fast)}});
    return kOk;
  }
  const auto naive = mt::naive_aba(a, b);
  const bool agree = naive == fast;
  emit(Json{{"agree", agree},
            {"trace", mt::io::elem_to_json(t)},
            {"naive", mt::io::matrix_to_json(naive)},
            {"fast", mt::io::matrix_to_json(fast)}});
  if (!agree) std::cerr << "naive and fast results differ\n";
  return agree ? kOk : kViolated;
}

int cmd_probe(const std::string& path) {
  const auto a = load_matrix(path);
  const auto report = mt::probe_converse(a);
  emit(mt::io::probe_report_to_json(report));
  if (report.structured) return kOk;
  const auto& w = *report.witness;
  std::cerr << "B = E_" << w.probe_l + 1 << "," << w.probe_j + 1 << " separates ABA from Tr(AB) A at ("
            << w.entry_i + 1 << "," << w.entry_k + 1 << "): " << w.lhs.str() << " vs " << w.rhs.str() << '\n';
  return kViolated;
}

int cmd_decompose(const std::string& path) {
  const auto a = load_matrix(path);
  std::optional<mt::OuterFactors> factors;
  switch (a.ring().kind()) {
    case mt::RingKind::Integers:
      if (a.rows() != 2 || a.cols() != 2) {
        throw mt::Error(mt::ErrorCode::ShapeMismatch, "integer decomposition is limited to 2x2 matrices");
      }
      if (!mt::det_small(a).is_zero()) break;
      factors = mt::decompose_2x2_gcd(a);
      break;
    case mt::RingKind::PrimeField:
      factors = mt::decompose_rank1_field(a);
      break;
    default:
      throw mt::Error(mt::ErrorCode::UnsupportedRing, "decompose supports int (2x2) and gf rings only");
  }
  if (!factors) {
    emit(Json{{"decomposable", false}, {"verdict", mt::io::verdict_to_json(mt::check_vanishing_minors(a))}});
    std::cerr << "matrix has a nonzero 2x2 minor; no column-row decomposition\n";
    return kViolated;
  }
  Json out = mt::io::factors_to_json(*factors);
  out["decomposable"] = true;
  emit(out);
  return kOk;
}

int cmd_power(const std::string& path, std::uint64_t k) {
  const auto a = load_matrix(path);
  try {
    emit(mt::io::matrix_to_json(mt::structured_power(a, k, precondition_mode())));
  } catch (const mt::StructureError&) {
    return structure_failure(a);
  }
  return kOk;
}

int cmd_exhaust(const std::string& ring_spec, std::size_t n, bool full, unsigned threads) {
  const auto ring = mt::io::parse_ring_spec(ring_spec);
  mt::ExhaustiveOptions options;
  options.unit_probes = !full;
  options.threads = threads;
  const auto report = mt::exhaustive_characterization(ring, n, options);
  emit(mt::io::equivalence_report_to_json(report));
  std::cerr << report.total << " matrices; " << report.set_identity << " satisfy the identity for all B, "
            << report.set_minors << " have vanishing minors; " << (report.agree ? "sets agree" : "SETS DIFFER")
            << '\n';
  return report.agree ? kOk : kViolated;
}

int cmd_gen(const std::string& ring_spec, std::size_t n, std::uint64_t seed, const std::string& mode, int bound) {
  const auto ring = mt::io::parse_ring_spec(ring_spec);
  if (n == 0) throw mt::Error(mt::ErrorCode::ShapeMismatch, "n must be positive");
  const auto gen_mode = mode == "nilscalar" ? mt::GenMode::NilScalar : mt::GenMode::Outer;
  emit(mt::io::matrix_to_json(mt::gen_structured(seed, ring, n, gen_mode, bound)));
  return kOk;
}

int cmd_bench(std::size_t n, const std::string& ring_spec, std::size_t reps, std::uint64_t seed) {
  mt::BenchConfig config;
  config.n = n;
  config.ring = mt::io::parse_ring_spec(ring_spec);
  config.reps = reps;
  config.seed = seed;
  if (config.ring.kind() == mt::RingKind::Integers || config.ring.kind() == mt::RingKind::PolyOver) {
    std::cerr << "note: entries of " << config.ring.spec()
              << " grow with the computation; timings mix kernel cost with big-number cost\n";
  }
  const auto result = mt::run_bench(config);
  emit(mt::bench_to_json(result));
  std::cerr << "n=" << result.n << " naive " << result.naive_median_ms << " ms, fast " << result.fast_median_ms
            << " ms, speedup " << result.speedup << "x\n";
  return result.agreement_checked ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and kernels for ABA = Tr(AB) A over commutative rings"};
  app.require_subcommand(1);

  std::string file_a, file_b;

  auto* check = app.add_subcommand("check", "Report whether every 2x2 minor vanishes");
  check->add_option("matrix", file_a, "Matrix JSON file ('-' for stdin)")->required();

  bool fast = false, naive = false, both = false;
  auto* verify = app.add_subcommand("verify", "Compare ABA with Tr(AB) A");
  verify->add_option("a", file_a, "Matrix JSON for A")->required();
  verify->add_option("b", file_b, "Matrix JSON for B")->required();
  auto* fast_flag = verify->add_flag("--fast", fast, "Tr(AB) A only (requires vanishing minors)");
  auto* naive_flag = verify->add_flag("--naive", naive, "Two full products and the residual");
  auto* both_flag = verify->add_flag("--both", both, "Run both and compare (default)");
  fast_flag->excludes(naive_flag)->excludes(both_flag);
  naive_flag->excludes(both_flag);

  auto* probe = app.add_subcommand("probe", "Find B = E_lj violating the identity, if any");
  probe->add_option("matrix", file_a, "Matrix JSON file")->required();

  auto* decompose = app.add_subcommand("decompose", "Column-row decomposition (2x2 int or gf)");
  decompose->add_option("matrix", file_a, "Matrix JSON file")->required();

  std::uint64_t power_k = 1;
  auto* power = app.add_subcommand("power", "A^k as Tr(A)^(k-1) A");
  power->add_option("matrix", file_a, "Matrix JSON file")->required();
  power->add_option("k", power_k, "Exponent, k >= 1")->required()->check(CLI::PositiveNumber);

  std::string ring_spec = "int";
  std::size_t n = 2;
  bool full = false;
  unsigned threads = 0;
  auto* exhaust = app.add_subcommand("exhaust", "Enumerate every n x n matrix over a finite ring");
  exhaust->add_option("--ring", ring_spec, "Finite ring spec, e.g. mod:2")->required();
  exhaust->add_option("--n", n, "Matrix order (>= 2)")->required();
  exhaust->add_flag("--full", full, "Quantify over every B instead of the E_lj probes");
  exhaust->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::uint64_t seed = 0;
  std::string mode = "outer";
  int bound = mt::kDefaultEntryBound;
  auto* gen = app.add_subcommand("gen", "Generate a matrix with vanishing minors");
  gen->add_option("--ring", ring_spec, "Ring spec: int, mod:<m>, gf:<p>, poly:<base>:<var>");
  gen->add_option("--n", n, "Matrix order");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--mode", mode, "outer | nilscalar")->check(CLI::IsMember({"outer", "nilscalar"}));
  gen->add_option("--bound", bound, "Entry bound for int coefficients")->check(CLI::PositiveNumber);

  std::string bench_ring = std::string("mod:") + mt::kDefaultBenchModulus;
  std::size_t bench_n = 256, reps = 5;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time naive ABA against Tr(AB) A");
  bench->add_option("--n", bench_n, "Matrix order (>= 16)");
  bench->add_option("--ring", bench_ring, "Ring spec");
  bench->add_option("--reps", reps, "Repetitions (>= 3)");
  bench->add_option("--seed", bench_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file_a);
    if (*verify) return cmd_verify(file_a, file_b, fast ? VerifyMode::Fast : naive ? VerifyMode::Naive : VerifyMode::Both);
    if (*probe) return cmd_probe(file_a);
    if (*decompose) return cmd_decompose(file_a);
    if (*power) return cmd_power(file_a, power_k);
    if (*exhaust) return cmd_exhaust(ring_spec, n, full, threads);
    if (*gen) return cmd_gen(ring_spec, n, seed, mode, bound);
    if (*bench) return cmd_bench(bench_n, bench_ring, reps, bench_seed);
  } catch (const mt::StructureError& e) {
    std::cerr << e.what() << '\n';
    return kStructureFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
