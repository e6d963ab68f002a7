// NEON variants (aarch64). Baseline on that architecture, so no runtime CPU
// check is needed beyond the platform itself.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::kernels::detail {
namespace {

// exp(x) for x <= 0; same reduction and polynomial as the AVX2 variant.
inline float64x2_t exp_negdomain(float64x2_t x) {
  const float64x2_t kUnderflow = vdupq_n_f64(-708.0);
  const float64x2_t kInvLn2 = vdupq_n_f64(1.4426950408889634074);
  const float64x2_t kLn2Hi = vdupq_n_f64(6.93147180369123816490e-01);
  const float64x2_t kLn2Lo = vdupq_n_f64(1.90821492927058770002e-10);

  const uint64x2_t zero_mask = vcltq_f64(x, kUnderflow);
  x = vmaxq_f64(x, kUnderflow);

  const float64x2_t n = vrndnq_f64(vmulq_f64(x, kInvLn2));
  float64x2_t r = vfmsq_f64(x, n, kLn2Hi);
  r = vfmsq_f64(r, n, kLn2Lo);

  float64x2_t p = vdupq_n_f64(1.0 / 3628800.0);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 362880.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 40320.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 5040.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 720.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 120.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 24.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0 / 6.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(0.5), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0), p, r);
  p = vfmaq_f64(vdupq_n_f64(1.0), p, r);

  const int64x2_t n64 = vcvtq_s64_f64(n);
  const int64x2_t bits = vshlq_n_s64(vaddq_s64(n64, vdupq_n_s64(1023)), 52);
  const float64x2_t scale = vreinterpretq_f64_s64(bits);

  const float64x2_t y = vmulq_f64(p, scale);
  return vreinterpretq_f64_u64(
      vbicq_u64(vreinterpretq_u64_f64(y), zero_mask));
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum_neon(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(a + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += a[i];
  return r;
}

double squared_distance_neon(const double* a, const double* b,
                             std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc = vfmaq_f64(acc, d, d);
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    r += d * d;
  }
  return r;
}

// As in the AVX2 variants, tails go through the same FMA path as the vector
// body so a row's result does not depend on its position.

void column_sqdist_neon(const double* cols, std::size_t n, std::size_t dim,
                        const double* p, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      const float64x2_t d =
          vsubq_f64(vld1q_f64(cols + j * n + i), vdupq_n_f64(p[j]));
      acc = vfmaq_f64(acc, d, d);
    }
    vst1q_f64(out + i, acc);
  }
  if (i < n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      const double tin[2] = {cols[j * n + i], p[j]};
      const float64x2_t d = vsubq_f64(vld1q_f64(tin), vdupq_n_f64(p[j]));
      acc = vfmaq_f64(acc, d, d);
    }
    double tout[2];
    vst1q_f64(tout, acc);
    out[i] = tout[0];
  }
}

void column_dot_neon(const double* cols, std::size_t n, std::size_t dim,
                     const double* p, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      acc = vfmaq_f64(acc, vld1q_f64(cols + j * n + i), vdupq_n_f64(p[j]));
    }
    vst1q_f64(out + i, acc);
  }
  if (i < n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      const double tin[2] = {cols[j * n + i], 0.0};
      acc = vfmaq_f64(acc, vld1q_f64(tin), vdupq_n_f64(p[j]));
    }
    double tout[2];
    vst1q_f64(tout, acc);
    out[i] = tout[0];
  }
}

double min_column_sqdist_neon(const double* cols, std::size_t n,
                              std::size_t dim, const double* p) {
  float64x2_t vbest = vdupq_n_f64(__builtin_huge_val());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      const float64x2_t d =
          vsubq_f64(vld1q_f64(cols + j * n + i), vdupq_n_f64(p[j]));
      acc = vfmaq_f64(acc, d, d);
    }
    vbest = vminq_f64(vbest, acc);
  }
  if (i < n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      // pad lane 1 with +inf so it cannot win the min
      const double tin[2] = {cols[j * n + i], __builtin_huge_val()};
      const float64x2_t d = vsubq_f64(vld1q_f64(tin), vdupq_n_f64(p[j]));
      acc = vfmaq_f64(acc, d, d);
    }
    double tout[2];
    vst1q_f64(tout, acc);
    vbest = vminq_f64(vbest, vdupq_n_f64(tout[0]));
  }
  return vminvq_f64(vbest);
}

void exp_neg_scaled_neon(const double* a, double s, double* out,
                         std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(-s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, exp_negdomain(vmulq_f64(vld1q_f64(a + i), vs)));
  }
  if (i < n) {
    // pad the tail through the same vector path so a value's exp does not
    // depend on its position
    double tin[2] = {a[i], 0.0};
    double tout[2];
    vst1q_f64(tout, exp_negdomain(vmulq_f64(vld1q_f64(tin), vs)));
    out[i] = tout[0];
  }
}

const Ops kNeonOps = {
    "neon",
    dot_neon,
    sum_neon,
    squared_distance_neon,
    column_sqdist_neon,
    column_dot_neon,
    min_column_sqdist_neon,
    exp_neg_scaled_neon,
};

}  // namespace

const Ops* neon_ops() { return &kNeonOps; }

}  // namespace trdmo::kernels::detail

#endif  // __aarch64__
