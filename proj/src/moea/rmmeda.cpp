// Regularity-model EDA: the population is modeled as K local affine pieces
// of an (M-1)-dimensional manifold (local PCA), offspring are drawn around
// the extended pieces with Gaussian residual noise, and survivors are picked
// by nondominated sorting with crowding. Kept as an optional third baseline.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "trdmo/moea/algorithms.hpp"
#include "trdmo/moea/dominance.hpp"

namespace trdmo::moea {

namespace {

struct Cluster {
  Eigen::VectorXd mean;
  Eigen::MatrixXd axes;        // dim x latent, leading principal directions
  std::vector<double> lo, hi;  // projected coordinate ranges per axis
  double noise_sigma = 0.0;
  std::vector<int> members;
};

std::vector<Cluster> local_pca_partition(const std::vector<Individual>& pop,
                                         int k, int latent, util::Rng& rng) {
  const int n = static_cast<int>(pop.size());
  const int dim = static_cast<int>(pop.front().x.size());
  k = std::min(k, n);

  Eigen::MatrixXd data(dim, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) data(j, i) = pop[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(j)];
  }

  // seed centers with distinct members, then alternate assignment/refit
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::VectorXd> centers;
  for (int c = 0; c < k; ++c) centers.push_back(data.col(rng.uniform_int(n)));
  for (int iter = 0; iter < 5; ++iter) {
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (data.col(i) - centers[0]).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (data.col(i) - centers[static_cast<std::size_t>(c)]).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      assign[static_cast<std::size_t>(i)] = best;
    }
    for (int c = 0; c < k; ++c) {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim);
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (assign[static_cast<std::size_t>(i)] == c) {
          sum += data.col(i);
          ++count;
        }
      }
      if (count > 0) centers[static_cast<std::size_t>(c)] = sum / count;
    }
  }

  std::vector<Cluster> clusters(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    clusters[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]
        .members.push_back(i);
  }
  // an empty cluster steals a random member so every piece stays usable
  for (auto& cluster : clusters) {
    if (cluster.members.empty()) {
      cluster.members.push_back(rng.uniform_int(n));
    }
  }

  for (auto& cluster : clusters) {
    const int count = static_cast<int>(cluster.members.size());
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
    for (int i : cluster.members) mean += data.col(i);
    mean /= count;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(dim, dim);
    for (int i : cluster.members) {
      const Eigen::VectorXd d = data.col(i) - mean;
      cov += d * d.transpose();
    }
    cov /= std::max(1, count - 1);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.info() != Eigen::Success) {
      throw std::runtime_error("rmmeda: covariance eigensolver failed");
    }
    // SelfAdjointEigenSolver sorts ascending; take the trailing columns.
    cluster.mean = mean;
    cluster.axes.resize(dim, latent);
    for (int a = 0; a < latent; ++a) {
      cluster.axes.col(a) = es.eigenvectors().col(dim - 1 - a);
    }
    double residual = 0.0;
    for (int a = 0; a < dim - latent; ++a) residual += std::max(0.0, es.eigenvalues()[a]);
    cluster.noise_sigma =
        std::sqrt(residual / std::max(1, dim - latent + 1)) + 1e-12;

    cluster.lo.assign(static_cast<std::size_t>(latent), 0.0);
    cluster.hi.assign(static_cast<std::size_t>(latent), 0.0);
    bool first = true;
    for (int i : cluster.members) {
      const Eigen::VectorXd proj =
          cluster.axes.transpose() * (data.col(i) - mean);
      for (int a = 0; a < latent; ++a) {
        if (first || proj[a] < cluster.lo[static_cast<std::size_t>(a)]) {
          cluster.lo[static_cast<std::size_t>(a)] = proj[a];
        }
        if (first || proj[a] > cluster.hi[static_cast<std::size_t>(a)]) {
          cluster.hi[static_cast<std::size_t>(a)] = proj[a];
        }
      }
      first = false;
    }
  }
  return clusters;
}

}  // namespace

std::vector<Individual> rmmeda_run(const bench::DynamicProblem& problem,
                                   double t,
                                   std::vector<bench::DecisionVector> init,
                                   int generations, util::Rng& rng,
                                   bench::EvalCounter* counter,
                                   const RmmedaParams& params) {
  if (init.empty()) throw std::invalid_argument("rmmeda_run: empty population");
  if (generations < 0) {
    throw std::invalid_argument("rmmeda_run: negative generation count");
  }
  const int n = static_cast<int>(init.size());
  const int dim = problem.decision_dim();
  const int latent = std::max(1, problem.objective_count() - 1);
  const bench::Bounds& bounds = problem.bounds();

  std::vector<Individual> pop;
  pop.reserve(static_cast<std::size_t>(n));
  for (auto& x : init) {
    Individual ind;
    ind.f = bench::counted_evaluate(problem, x, t, counter);
    ind.x = std::move(x);
    pop.push_back(std::move(ind));
  }

  for (int gen = 0; gen < generations; ++gen) {
    const auto clusters =
        local_pca_partition(pop, params.clusters, latent, rng);

    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(offspring.size()) < n) {
      // piece chosen proportional to its share of the population
      int pick = rng.uniform_int(n);
      const Cluster* cluster = &clusters.back();
      for (const auto& c : clusters) {
        pick -= static_cast<int>(c.members.size());
        if (pick < 0) {
          cluster = &c;
          break;
        }
      }
      Eigen::VectorXd x = cluster->mean;
      for (int a = 0; a < latent; ++a) {
        const double span = cluster->hi[static_cast<std::size_t>(a)] -
                            cluster->lo[static_cast<std::size_t>(a)];
        const double lo =
            cluster->lo[static_cast<std::size_t>(a)] - params.extension * span;
        const double hi =
            cluster->hi[static_cast<std::size_t>(a)] + params.extension * span;
        x += rng.uniform(lo, hi) * cluster->axes.col(a);
      }
      for (int j = 0; j < dim; ++j) x[j] += cluster->noise_sigma * rng.normal();

      Individual ind;
      ind.x = bench::DecisionVector(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j) ind.x[static_cast<std::size_t>(j)] = x[j];
      bench::clamp_to_bounds(bounds, ind.x);
      ind.f = bench::counted_evaluate(problem, ind.x, t, counter);
      offspring.push_back(std::move(ind));
    }

    std::vector<Individual> merged = std::move(pop);
    merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
    const auto fronts = fast_nondominated_sort(merged);
    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(n));
    for (const auto& front : fronts) {
      crowding_distance(merged, front);
      if (static_cast<int>(next.size() + front.size()) <= n) {
        for (int idx : front) {
          next.push_back(std::move(merged[static_cast<std::size_t>(idx)]));
        }
      } else {
        std::vector<int> by_crowding = front;
        std::stable_sort(by_crowding.begin(), by_crowding.end(),
                         [&](int a, int b) {
                           return merged[static_cast<std::size_t>(a)].crowding >
                                  merged[static_cast<std::size_t>(b)].crowding;
                         });
        for (int idx : by_crowding) {
          if (static_cast<int>(next.size()) >= n) break;
          next.push_back(std::move(merged[static_cast<std::size_t>(idx)]));
        }
        break;
      }
      if (static_cast<int>(next.size()) >= n) break;
    }
    pop = std::move(next);
  }

  const auto fronts = fast_nondominated_sort(pop);
  std::vector<Individual> archive;
  for (int idx : fronts.front()) {
    archive.push_back(pop[static_cast<std::size_t>(idx)]);
  }
  return archive;
}

}  // namespace trdmo::moea
