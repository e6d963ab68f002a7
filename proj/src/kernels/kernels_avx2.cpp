// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma;
// the dispatcher only selects it after a runtime CPU check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
}

// exp(x) for x <= 0. Cody-Waite range reduction, degree-10 Taylor on
// [-ln2/2, ln2/2] (max relative error ~2e-13), exponent reassembly.
inline __m256d exp_negdomain(__m256d x) {
  const __m256d kUnderflow = _mm256_set1_pd(-708.0);
  const __m256d kInvLn2 = _mm256_set1_pd(1.4426950408889634074);
  const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);

  const __m256d zero_mask = _mm256_cmp_pd(x, kUnderflow, _CMP_LT_OQ);
  x = _mm256_max_pd(x, kUnderflow);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, kInvLn2),
                                    _MM_FROUND_TO_NEAREST_INT |
                                        _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, kLn2Hi, x);
  r = _mm256_fnmadd_pd(n, kLn2Lo, r);

  __m256d p = _mm256_set1_pd(1.0 / 3628800.0);
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  // 2^n with n in [-1022, 0]: build the exponent field directly.
  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i bits =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  const __m256d scale = _mm256_castsi256_pd(bits);

  return _mm256_andnot_pd(zero_mask, _mm256_mul_pd(p, scale));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i];
  return r;
}

double squared_distance_avx2(const double* a, const double* b,
                             std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

// Tails are padded through the same FMA path as the vector body: a row's
// result must depend only on its values, not its position, or gram-matrix
// symmetry breaks by an ulp.

inline __m256d tail_sqdist(const double* cols, std::size_t n, std::size_t dim,
                           const double* p, std::size_t i) {
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < dim; ++j) {
    double tin[4];
    for (std::size_t k = 0; k < 4; ++k) {
      tin[k] = i + k < n ? cols[j * n + i + k] : p[j];  // pad: distance 0
    }
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(tin), _mm256_set1_pd(p[j]));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  return acc;
}

void column_sqdist_avx2(const double* cols, std::size_t n, std::size_t dim,
                        const double* p, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(cols + j * n + i),
                                      _mm256_set1_pd(p[j]));
      acc = _mm256_fmadd_pd(d, d, acc);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) {
    double tout[4];
    _mm256_storeu_pd(tout, tail_sqdist(cols, n, dim, p, i));
    for (std::size_t k = i; k < n; ++k) out[k] = tout[k - i];
  }
}

void column_dot_avx2(const double* cols, std::size_t n, std::size_t dim,
                     const double* p, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(cols + j * n + i),
                            _mm256_set1_pd(p[j]), acc);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      double tin[4];
      for (std::size_t k = 0; k < 4; ++k) {
        tin[k] = i + k < n ? cols[j * n + i + k] : 0.0;
      }
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(tin), _mm256_set1_pd(p[j]), acc);
    }
    double tout[4];
    _mm256_storeu_pd(tout, acc);
    for (std::size_t k = i; k < n; ++k) out[k] = tout[k - i];
  }
}

double min_column_sqdist_avx2(const double* cols, std::size_t n,
                              std::size_t dim, const double* p) {
  __m256d vbest = _mm256_set1_pd(__builtin_huge_val());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(cols + j * n + i),
                                      _mm256_set1_pd(p[j]));
      acc = _mm256_fmadd_pd(d, d, acc);
    }
    vbest = _mm256_min_pd(vbest, acc);
  }
  if (i < n) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < dim; ++j) {
      double tin[4];
      for (std::size_t k = 0; k < 4; ++k) {
        // pad with +inf so the padding lanes never win the min
        tin[k] = i + k < n ? cols[j * n + i + k] : __builtin_huge_val();
      }
      const __m256d d =
          _mm256_sub_pd(_mm256_loadu_pd(tin), _mm256_set1_pd(p[j]));
      acc = _mm256_fmadd_pd(d, d, acc);
    }
    vbest = _mm256_min_pd(vbest, acc);  // with dim == 0 every lane is 0 anyway
  }
  return hmin(vbest);
}

void exp_neg_scaled_avx2(const double* a, double s, double* out,
                         std::size_t n) {
  const __m256d vs = _mm256_set1_pd(-s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i,
                     exp_negdomain(_mm256_mul_pd(_mm256_loadu_pd(a + i), vs)));
  }
  if (i < n) {
    // pad the tail through the same vector path: a value's exp must not
    // depend on its position (gram symmetry relies on that)
    double tin[4] = {0.0, 0.0, 0.0, 0.0};
    double tout[4];
    for (std::size_t k = i; k < n; ++k) tin[k - i] = a[k];
    _mm256_storeu_pd(tout, exp_negdomain(_mm256_mul_pd(_mm256_loadu_pd(tin), vs)));
    for (std::size_t k = i; k < n; ++k) out[k] = tout[k - i];
  }
}

const Ops kAvx2Ops = {
    "avx2",
    dot_avx2,
    sum_avx2,
    squared_distance_avx2,
    column_sqdist_avx2,
    column_dot_avx2,
    min_column_sqdist_avx2,
    exp_neg_scaled_avx2,
};

}  // namespace

const Ops* avx2_ops() { return &kAvx2Ops; }

}  // namespace trdmo::kernels::detail

#endif  // x86_64
