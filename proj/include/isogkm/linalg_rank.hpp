#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace isogkm {

/// Sparse integer matrix, one sorted (column, coefficient) list per row.
/// Coefficients are small signed integers (the congruence systems only
/// produce +-1 entries, but the kernels accept anything).
struct SparseIntMatrix {
  long cols = 0;
  std::vector<std::vector<std::pair<long, long>>> rows;

  long nnz() const {
    long t = 0;
    for (const auto& r : rows) t += static_cast<long>(r.size());
    return t;
  }
};

/// Rank over F_p by streaming row echelon (p a prime below 2^62).
/// Serial reference implementation; kept alongside the parallel kernel so the
/// two can be checked against each other.
long rank_mod_p_serial(const SparseIntMatrix& m, std::uint64_t p);

/// Same computation with the per-batch row reductions done in parallel
/// (OpenMP). Deterministic: batches are reduced against a frozen pivot set,
/// then survivors are inserted in order.
long rank_mod_p_parallel(const SparseIntMatrix& m, std::uint64_t p);

long rank_mod_p(const SparseIntMatrix& m, std::uint64_t p, bool parallel);

/// Rank over the rationals by exact fraction-valued row echelon. Intended for
/// systems up to a few thousand columns.
long rank_exact(const SparseIntMatrix& m);

/// Uniformly random 62-bit prime (Miller-Rabin certified, deterministic for
/// the word range used here).
std::uint64_t random_prime_62(std::mt19937_64& rng);

bool is_prime_u64(std::uint64_t n);

}  // namespace isogkm
