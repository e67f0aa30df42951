#include "minortrace/oracle.hpp"

#include <algorithm>
#include <thread>

#include "minortrace/kernels.hpp"
#include "minortrace/structure.hpp"

namespace minortrace {

Matrix verify_identity(const Matrix& a, const Matrix& b) {
  return mat_sub(naive_aba(a, b), scale(trace(mat_mul(a, b)), a));
}

bool identity_holds_on_unit_probes(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "identity check needs a square matrix");
  const std::size_t n = a.rows();
  for (std::size_t l = 0; l < n; ++l) {
    const Matrix col = a.col(l);
    for (std::size_t j = 0; j < n; ++j) {
      // A E_lj A = col_l(A) row_j(A); Tr(A E_lj) = a[j][l].
      if (outer(col, a.row(j)) != scale(a.at(j, l), a)) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t enumeration_size(const Ring& ring, std::size_t n) {
  if (!ring.is_finite()) throw Error(ErrorCode::UnsupportedRing, "cannot enumerate matrices over " + ring.spec());
  const Integer& m = ring.modulus();
  Integer total = 1;
  for (std::size_t t = 0; t < n * n; ++t) {
    total *= m;
    if (total > kEnumerationLimit) {
      throw Error(ErrorCode::TooLargeToEnumerate,
                  ring.spec() + " with n = " + std::to_string(n) + " exceeds " + std::to_string(kEnumerationLimit));
    }
  }
  return total.get_ui();
}

}  // namespace

bool identity_holds_for_all_b(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "identity check needs a square matrix");
  const std::uint64_t total = enumeration_size(a.ring(), a.rows());
  for (std::uint64_t t = 0; t < total; ++t) {
    if (!verify_identity(a, enumerate_matrix(a.ring(), a.rows(), t)).is_zero()) return false;
  }
  return true;
}

Matrix enumerate_matrix(const Ring& ring, std::size_t n, std::uint64_t index) {
  const std::uint64_t m = ring.modulus().get_ui();
  std::vector<Value> entries;
  entries.reserve(n * n);
  for (std::size_t t = 0; t < n * n; ++t) {
    entries.push_back(ring.from_integer(static_cast<long long>(index % m)));
    index /= m;
  }
  return Matrix(ring, n, n, std::move(entries));
}

EquivalenceReport exhaustive_characterization(const Ring& ring, std::size_t n, const ExhaustiveOptions& options) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "exhaustive characterization needs n >= 2");
  const std::uint64_t total = enumeration_size(ring, n);

  struct Partial {
    std::uint64_t identity = 0;
    std::uint64_t minors = 0;
    std::uint64_t spot_checks = 0;
    std::vector<std::uint64_t> mismatches;
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Partial> partials(threads);

  auto work = [&](unsigned worker) {
    Partial& out = partials[worker];
    const std::uint64_t begin = total * worker / threads;
    const std::uint64_t end = total * (worker + 1) / threads;
    for (std::uint64_t t = begin; t < end; ++t) {
      const Matrix a = enumerate_matrix(ring, n, t);
      const bool by_minors = check_vanishing_minors(a).structured;
      bool by_identity = options.unit_probes ? identity_holds_on_unit_probes(a) : identity_holds_for_all_b(a);
      bool spot_failed = false;
      if (options.unit_probes && options.spot_check_every != 0 && t % options.spot_check_every == 0) {
        ++out.spot_checks;
        spot_failed = identity_holds_for_all_b(a) != by_identity;
      }
      out.identity += by_identity ? 1 : 0;
      out.minors += by_minors ? 1 : 0;
      if ((by_identity != by_minors || spot_failed) && out.mismatches.size() < kMaxMismatches) {
        out.mismatches.push_back(t);
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  EquivalenceReport report{ring, n, total, 0, 0, 0, true, {}};
  std::vector<std::uint64_t> mismatch_indices;
  for (const auto& p : partials) {
    report.set_identity += p.identity;
    report.set_minors += p.minors;
    report.spot_checks += p.spot_checks;
    mismatch_indices.insert(mismatch_indices.end(), p.mismatches.begin(), p.mismatches.end());
  }
  std::sort(mismatch_indices.begin(), mismatch_indices.end());
  if (mismatch_indices.size() > kMaxMismatches) mismatch_indices.resize(kMaxMismatches);
  for (auto t : mismatch_indices) report.mismatches.push_back(enumerate_matrix(ring, n, t));
  report.agree = report.mismatches.empty();
  return report;
}

}  // namespace minortrace
