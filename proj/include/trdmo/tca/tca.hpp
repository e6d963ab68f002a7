#ifndef TRDMO_TCA_TCA_HPP
#define TRDMO_TCA_TCA_HPP

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "trdmo/tca/kernel.hpp"

namespace trdmo::tca {

/// Fitted transfer model. Maps an objective vector p to the latent vector
/// W^T kappa_p, where kappa_p[i] = kernel(bank[i], p) over the fixed sample
/// bank (source samples first, then target). Immutable after fit.
struct TcaModel {
  std::vector<ObjectiveVector> bank;
  KernelSpec kernel;
  Eigen::MatrixXd w;                 // (m+n) x d, unit-norm columns
  std::vector<double> eigenvalues;   // non-increasing, one per column
  int latent_dim = 0;
  double mu = 0.0;
  int source_count = 0;
  int target_count = 0;
};

/// Fit by taking the d leading eigenvectors of (KLK + mu I)^{-1} K H K over
/// the concatenated sample bank. Columns are sorted by non-increasing
/// eigenvalue, unit-normalized, and sign-fixed (largest-magnitude component
/// positive) so fits are reproducible. Throws std::invalid_argument on bad
/// shapes and std::runtime_error if the eigensolver fails or produces a
/// materially complex leading pair.
TcaModel tca_fit(const std::vector<ObjectiveVector>& source,
                 const std::vector<ObjectiveVector>& target,
                 const KernelSpec& kernel, int d, double mu);

/// W^T kappa_p for a single point.
std::vector<double> tca_map(const TcaModel& model, const ObjectiveVector& p);

/// Flattened view of a TcaModel for repeated mapping in inner loops.
class TcaMapper {
 public:
  explicit TcaMapper(const TcaModel& model);

  int latent_dim() const { return latent_dim_; }
  int bank_size() const { return bank_size_; }
  int point_dim() const { return point_dim_; }

  /// out must hold latent_dim() doubles; p must have point_dim() entries.
  void map(const double* p, std::size_t p_len, double* out) const;

 private:
  std::vector<double> bank_cols_;  // column-major bank, bank_size x point_dim
  std::vector<double> w_;          // column-major, bank_size x latent_dim
  double inv_two_sigma_sq_ = 0.0;
  KernelKind kind_;
  int bank_size_;
  int point_dim_;
  int latent_dim_;
};

nlohmann::json tca_model_to_json(const TcaModel& model);
TcaModel tca_model_from_json(const nlohmann::json& j);

}  // namespace trdmo::tca

#endif
