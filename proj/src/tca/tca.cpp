#include "trdmo/tca/tca.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::tca {

TcaModel tca_fit(const std::vector<ObjectiveVector>& source,
                 const std::vector<ObjectiveVector>& target,
                 const KernelSpec& kernel, int d, double mu) {
  const int m = static_cast<int>(source.size());
  const int n = static_cast<int>(target.size());
  if (m < 1 || n < 1) {
    throw std::invalid_argument("tca_fit: source and target must be nonempty");
  }
  if (d < 1 || d > m + n) {
    throw std::invalid_argument("tca_fit: latent dimension must be in [1, m+n]");
  }
  if (!(mu > 0.0)) throw std::invalid_argument("tca_fit: mu must be > 0");
  kernel.validate();

  TcaModel model;
  model.bank.reserve(static_cast<std::size_t>(m + n));
  model.bank.insert(model.bank.end(), source.begin(), source.end());
  model.bank.insert(model.bank.end(), target.begin(), target.end());
  model.kernel = kernel;
  model.latent_dim = d;
  model.mu = mu;
  model.source_count = m;
  model.target_count = n;

  const Eigen::MatrixXd gram = gram_matrix(model.bank, kernel);
  const Eigen::MatrixXd scale = scaling_matrix(m, n);
  const Eigen::MatrixXd center = centering_matrix(m + n);

  const Eigen::MatrixXd klk = gram * scale * gram;
  const Eigen::MatrixXd khk = gram * center * gram;
  const Eigen::MatrixXd lhs =
      klk + mu * Eigen::MatrixXd::Identity(m + n, m + n);

  // Eigenpairs of lhs^{-1} khk. The pencil (khk, lhs) is symmetric with a
  // positive-definite right side, so the spectrum is real; solving in the
  // Cholesky-reduced symmetric form keeps it that way numerically (a plain
  // nonsymmetric solve can emit spurious complex pairs when eigenvalues
  // cluster, which at d = 20 on a 200-point bank they routinely do).
  const Eigen::LLT<Eigen::MatrixXd> llt(lhs);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("tca_fit: regularized MMD matrix not positive "
                             "definite");
  }
  const Eigen::MatrixXd chol_l = llt.matrixL();
  const Eigen::MatrixXd reduced =
      chol_l.triangularView<Eigen::Lower>().solve(
          Eigen::MatrixXd(chol_l.triangularView<Eigen::Lower>()
                              .solve(khk)
                              .transpose()));
  // reduced = L^-1 khk L^-T, symmetrized against round-off
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (reduced + reduced.transpose()));
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("tca_fit: eigensolver failed to converge");
  }

  model.w.resize(m + n, d);
  model.eigenvalues.resize(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    const int src = m + n - 1 - c;  // ascending order -> take from the top
    Eigen::VectorXd col = chol_l.transpose()
                              .triangularView<Eigen::Upper>()
                              .solve(es.eigenvectors().col(src));
    const double norm = col.norm();
    if (!(norm > 0.0)) {
      throw std::runtime_error("tca_fit: degenerate eigenvector");
    }
    col /= norm;
    int peak = 0;
    for (int r = 1; r < m + n; ++r) {
      if (std::abs(col[r]) > std::abs(col[peak])) peak = r;
    }
    if (col[peak] < 0.0) col = -col;
    model.w.col(c) = col;
    model.eigenvalues[static_cast<std::size_t>(c)] = es.eigenvalues()[src];
  }
  return model;
}

TcaMapper::TcaMapper(const TcaModel& model)
    : kind_(model.kernel.kind),
      bank_size_(static_cast<int>(model.bank.size())),
      point_dim_(static_cast<int>(model.bank.front().size())),
      latent_dim_(model.latent_dim) {
  if (model.w.rows() != bank_size_ || model.w.cols() != latent_dim_) {
    throw std::invalid_argument("TcaMapper: model W has inconsistent shape");
  }
  model.kernel.validate();
  const double sigma = model.kernel.bandwidth;
  inv_two_sigma_sq_ = 1.0 / (2.0 * sigma * sigma);
  bank_cols_.resize(static_cast<std::size_t>(bank_size_) * point_dim_);
  for (int i = 0; i < bank_size_; ++i) {
    if (static_cast<int>(model.bank[i].size()) != point_dim_) {
      throw std::invalid_argument("TcaMapper: bank vectors of mixed lengths");
    }
    for (int j = 0; j < point_dim_; ++j) {
      bank_cols_[static_cast<std::size_t>(j) * bank_size_ + i] =
          model.bank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  w_.resize(static_cast<std::size_t>(bank_size_) * latent_dim_);
  for (int c = 0; c < latent_dim_; ++c) {
    for (int r = 0; r < bank_size_; ++r) {
      w_[static_cast<std::size_t>(c) * bank_size_ + r] = model.w(r, c);
    }
  }
}

void TcaMapper::map(const double* p, std::size_t p_len, double* out) const {
  if (static_cast<int>(p_len) != point_dim_) {
    throw std::invalid_argument("tca_map: point has the wrong length");
  }
  thread_local std::vector<double> kappa;
  kappa.resize(static_cast<std::size_t>(bank_size_));
  const auto& ops = kernels::ops();
  const auto nb = static_cast<std::size_t>(bank_size_);
  if (kind_ == KernelKind::kLinear) {
    ops.column_dot(bank_cols_.data(), nb, static_cast<std::size_t>(point_dim_),
                   p, kappa.data());
  } else {
    ops.column_sqdist(bank_cols_.data(), nb,
                      static_cast<std::size_t>(point_dim_), p, kappa.data());
    ops.exp_neg_scaled(kappa.data(), inv_two_sigma_sq_, kappa.data(), nb);
  }
  for (int c = 0; c < latent_dim_; ++c) {
    out[c] = ops.dot(kappa.data(), w_.data() + static_cast<std::size_t>(c) * nb,
                     nb);
  }
}

std::vector<double> tca_map(const TcaModel& model, const ObjectiveVector& p) {
  const TcaMapper mapper(model);
  std::vector<double> out(static_cast<std::size_t>(model.latent_dim));
  mapper.map(p.data(), p.size(), out.data());
  return out;
}

nlohmann::json tca_model_to_json(const TcaModel& model) {
  nlohmann::json j;
  j["kernel"] = {{"kind", model.kernel.kind == KernelKind::kGaussian
                              ? "gaussian"
                              : "linear"},
                 {"bandwidth", model.kernel.bandwidth}};
  j["d"] = model.latent_dim;
  j["mu"] = model.mu;
  j["m"] = model.source_count;
  j["n"] = model.target_count;
  j["eigenvalues"] = model.eigenvalues;
  auto& bank = j["bank"] = nlohmann::json::array();
  for (const auto& p : model.bank) bank.push_back(p.values);
  auto& w = j["W"] = nlohmann::json::array();  // row-major
  for (Eigen::Index r = 0; r < model.w.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < model.w.cols(); ++c) row.push_back(model.w(r, c));
    w.push_back(std::move(row));
  }
  return j;
}

TcaModel tca_model_from_json(const nlohmann::json& j) {
  TcaModel model;
  const std::string kind = j.at("kernel").at("kind").get<std::string>();
  if (kind == "gaussian") {
    model.kernel.kind = KernelKind::kGaussian;
  } else if (kind == "linear") {
    model.kernel.kind = KernelKind::kLinear;
  } else {
    throw std::invalid_argument("tca model: unknown kernel kind " + kind);
  }
  model.kernel.bandwidth = j.at("kernel").at("bandwidth").get<double>();
  model.latent_dim = j.at("d").get<int>();
  model.mu = j.at("mu").get<double>();
  model.source_count = j.at("m").get<int>();
  model.target_count = j.at("n").get<int>();
  model.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  for (const auto& row : j.at("bank")) {
    model.bank.push_back(ObjectiveVector{row.get<std::vector<double>>()});
  }
  const auto& w = j.at("W");
  const auto rows = static_cast<Eigen::Index>(w.size());
  if (rows != static_cast<Eigen::Index>(model.bank.size()) ||
      model.bank.size() !=
          static_cast<std::size_t>(model.source_count + model.target_count)) {
    throw std::invalid_argument("tca model: inconsistent bank/W shape");
  }
  model.w.resize(rows, model.latent_dim);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto row = w[static_cast<std::size_t>(r)].get<std::vector<double>>();
    if (static_cast<int>(row.size()) != model.latent_dim) {
      throw std::invalid_argument("tca model: W row of wrong length");
    }
    for (int c = 0; c < model.latent_dim; ++c) model.w(r, c) = row[c];
  }
  return model;
}

}  // namespace trdmo::tca
