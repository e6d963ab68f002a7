#ifndef TRDMO_TCA_KERNEL_HPP
#define TRDMO_TCA_KERNEL_HPP

#include <Eigen/Dense>
#include <vector>

#include "trdmo/bench/types.hpp"

namespace trdmo::tca {

using bench::ObjectiveVector;

enum class KernelKind { kGaussian, kLinear };

/// Kernel function spec. The Gaussian kernel is
/// exp(-||x-y||^2 / (2 sigma^2)); the linear kernel is <x, y>.
struct KernelSpec {
  KernelKind kind = KernelKind::kGaussian;
  double bandwidth = 1.0;  // sigma, Gaussian only

  void validate() const;  // throws std::invalid_argument
};

double kernel_eval(const KernelSpec& k, const ObjectiveVector& x,
                   const ObjectiveVector& y);

/// Median of all pairwise Euclidean distances; falls back to 1 when the
/// median is zero (all points identical). Needs at least two points.
double median_bandwidth(const std::vector<ObjectiveVector>& points);

/// K[i][j] = kernel(points[i], points[j]). Exactly symmetric.
Eigen::MatrixXd gram_matrix(const std::vector<ObjectiveVector>& points,
                            const KernelSpec& k);

/// The (m+n)x(m+n) MMD coefficient matrix: 1/m^2 on the source block,
/// 1/n^2 on the target block, -1/(mn) off-diagonal blocks.
Eigen::MatrixXd scaling_matrix(int m, int n);

/// H = I - (1/size) * ones. Symmetric and idempotent.
Eigen::MatrixXd centering_matrix(int size);

/// Empirical squared MMD between the two samples, computed in trace form
/// tr(K L) over the concatenated sample bank.
double mmd(const std::vector<ObjectiveVector>& x,
           const std::vector<ObjectiveVector>& y, const KernelSpec& k);

}  // namespace trdmo::tca

#endif
