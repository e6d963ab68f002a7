#include <cmath>
#include <cstddef>

#include "trdmo/kernels/kernels.hpp"

// Reference implementations. Plain loops, no reassociation tricks: these
// define the semantics the SIMD variants are tested against.

namespace trdmo::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double squared_distance_scalar(const double* a, const double* b,
                               std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void column_sqdist_scalar(const double* cols, std::size_t n, std::size_t dim,
                          const double* p, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double* col = cols + j * n;
    const double pj = p[j];
    for (std::size_t i = 0; i < n; ++i) {
      const double d = col[i] - pj;
      out[i] += d * d;
    }
  }
}

void column_dot_scalar(const double* cols, std::size_t n, std::size_t dim,
                       const double* p, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double* col = cols + j * n;
    const double pj = p[j];
    for (std::size_t i = 0; i < n; ++i) out[i] += col[i] * pj;
  }
}

double min_column_sqdist_scalar(const double* cols, std::size_t n,
                                std::size_t dim, const double* p) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = cols[j * n + i] - p[j];
      acc += d * d;
    }
    if (i == 0 || acc < best) best = acc;
  }
  return best;
}

void exp_neg_scaled_scalar(const double* a, double s, double* out,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(-a[i] * s);
}

extern const Ops kScalarOps;
const Ops kScalarOps = {
    "scalar",
    dot_scalar,
    sum_scalar,
    squared_distance_scalar,
    column_sqdist_scalar,
    column_dot_scalar,
    min_column_sqdist_scalar,
    exp_neg_scaled_scalar,
};

}  // namespace trdmo::kernels::detail
