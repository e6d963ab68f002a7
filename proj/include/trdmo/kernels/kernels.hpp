#ifndef TRDMO_KERNELS_KERNELS_HPP
#define TRDMO_KERNELS_KERNELS_HPP

#include <cstddef>

// Data-parallel inner loops used by the kernel/metric layers. Every kernel
// exists as a scalar reference implementation plus SIMD variants (AVX2 on
// x86-64, NEON on aarch64) selected once at runtime. The SIMD variants are
// equivalence-tested against the scalar reference; they may differ from it
// by rounding only (FMA contraction, polynomial exp).
//
// Column-major convention: `cols` holds `dim` arrays of length `n` back to
// back, so component j of row i lives at cols[j * n + i]. This puts the
// vectorizable axis (rows) contiguous in memory.

namespace trdmo::kernels {

struct Ops {
  const char* name;

  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);

  // out[i] = sum_j (cols[j*n+i] - p[j])^2
  void (*column_sqdist)(const double* cols, std::size_t n, std::size_t dim,
                        const double* p, double* out);
  // out[i] = sum_j cols[j*n+i] * p[j]
  void (*column_dot)(const double* cols, std::size_t n, std::size_t dim,
                     const double* p, double* out);
  // min_i sum_j (cols[j*n+i] - p[j])^2; n must be >= 1
  double (*min_column_sqdist)(const double* cols, std::size_t n,
                              std::size_t dim, const double* p);
  // out[i] = exp(-a[i] * s), a[i] >= 0, s >= 0
  void (*exp_neg_scaled)(const double* a, double s, double* out,
                         std::size_t n);
};

enum class Isa { kScalar, kAvx2, kNeon };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);

/// Kernels for a specific ISA; throws std::invalid_argument if unavailable.
const Ops& ops(Isa isa);

/// Dispatched kernels. First call picks the best available ISA, honoring the
/// TRDMO_KERNELS environment variable (scalar|avx2|neon) when set.
const Ops& ops();

Isa active_isa();

/// Test hook: override the dispatched ISA. Not safe while other threads call
/// ops().
void force_isa(Isa isa);

}  // namespace trdmo::kernels

#endif
