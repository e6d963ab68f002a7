#include "trdmo/tca/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::tca {

namespace {

void check_same_length(const std::vector<ObjectiveVector>& pts) {
  for (const auto& p : pts) {
    if (p.size() != pts.front().size()) {
      throw std::invalid_argument("kernel: vectors of mixed lengths");
    }
  }
}

// Pack points column-major: component j of point i at cols[j * n + i].
std::vector<double> pack_columns(const std::vector<ObjectiveVector>& pts) {
  const std::size_t n = pts.size();
  const std::size_t dim = pts.front().size();
  std::vector<double> cols(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) cols[j * n + i] = pts[i][j];
  }
  return cols;
}

}  // namespace

void KernelSpec::validate() const {
  if (kind == KernelKind::kGaussian && !(bandwidth > 0.0)) {
    throw std::invalid_argument("kernel: Gaussian bandwidth must be > 0");
  }
}

double kernel_eval(const KernelSpec& k, const ObjectiveVector& x,
                   const ObjectiveVector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("kernel_eval: mismatched vector lengths");
  }
  k.validate();
  const auto& ops = kernels::ops();
  if (k.kind == KernelKind::kLinear) {
    return ops.dot(x.data(), y.data(), x.size());
  }
  const double sq = ops.squared_distance(x.data(), y.data(), x.size());
  return std::exp(-sq / (2.0 * k.bandwidth * k.bandwidth));
}

double median_bandwidth(const std::vector<ObjectiveVector>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("median_bandwidth: need at least two points");
  }
  check_same_length(points);
  const auto& ops = kernels::ops();
  std::vector<double> dists;
  dists.reserve(points.size() * (points.size() - 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      dists.push_back(std::sqrt(ops.squared_distance(
          points[i].data(), points[j].data(), points[i].size())));
    }
  }
  std::sort(dists.begin(), dists.end());
  const std::size_t c = dists.size();
  const double med =
      c % 2 == 1 ? dists[c / 2] : 0.5 * (dists[c / 2 - 1] + dists[c / 2]);
  return med > 0.0 ? med : 1.0;
}

Eigen::MatrixXd gram_matrix(const std::vector<ObjectiveVector>& points,
                            const KernelSpec& k) {
  if (points.empty()) {
    throw std::invalid_argument("gram_matrix: need at least one point");
  }
  check_same_length(points);
  k.validate();
  const auto& ops = kernels::ops();
  const std::size_t n = points.size();
  const std::size_t dim = points.front().size();
  const std::vector<double> cols = pack_columns(points);

  Eigen::MatrixXd gram(n, n);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (k.kind == KernelKind::kLinear) {
      ops.column_dot(cols.data(), n, dim, points[i].data(), row.data());
    } else {
      ops.column_sqdist(cols.data(), n, dim, points[i].data(), row.data());
      ops.exp_neg_scaled(row.data(), 1.0 / (2.0 * k.bandwidth * k.bandwidth),
                         row.data(), n);
    }
    for (std::size_t j = 0; j < n; ++j) {
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          row[j];
    }
  }
  return gram;
}

Eigen::MatrixXd scaling_matrix(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("scaling_matrix: m and n must be >= 1");
  }
  const int size = m + n;
  Eigen::MatrixXd scale(size, size);
  const double mm = 1.0 / (static_cast<double>(m) * m);
  const double nn = 1.0 / (static_cast<double>(n) * n);
  const double mn = -1.0 / (static_cast<double>(m) * n);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      scale(i, j) = (i < m && j < m) ? mm : (i >= m && j >= m) ? nn : mn;
    }
  }
  return scale;
}

Eigen::MatrixXd centering_matrix(int size) {
  if (size < 1) throw std::invalid_argument("centering_matrix: size >= 1");
  return Eigen::MatrixXd::Identity(size, size) -
         Eigen::MatrixXd::Constant(size, size, 1.0 / size);
}

double mmd(const std::vector<ObjectiveVector>& x,
           const std::vector<ObjectiveVector>& y, const KernelSpec& k) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("mmd: both samples must be nonempty");
  }
  if (x.front().size() != y.front().size()) {
    throw std::invalid_argument("mmd: samples of mixed vector lengths");
  }
  std::vector<ObjectiveVector> bank;
  bank.reserve(x.size() + y.size());
  bank.insert(bank.end(), x.begin(), x.end());
  bank.insert(bank.end(), y.begin(), y.end());
  const Eigen::MatrixXd gram = gram_matrix(bank, k);
  const Eigen::MatrixXd scale =
      scaling_matrix(static_cast<int>(x.size()), static_cast<int>(y.size()));
  return (gram.array() * scale.array()).sum();
}

}  // namespace trdmo::tca
