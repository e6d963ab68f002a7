#include "trdmo/transfer/ipg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::ipg {

void IpgConfig::validate() const {
  if (source_samples < 2 || target_samples < 2) {
    throw std::invalid_argument("ipg: sample counts must be >= 2");
  }
  if (latent_dim < 1 || latent_dim > source_samples + target_samples) {
    throw std::invalid_argument(
        "ipg: latent dimension must be in [1, source_samples + target_samples]");
  }
  if (!(mu > 0.0)) throw std::invalid_argument("ipg: mu must be > 0");
  if (inner_budget < 1) throw std::invalid_argument("ipg: inner budget must be >= 1");
  if (target_pop_size < 1) {
    throw std::invalid_argument("ipg: target population size must be >= 1");
  }
  if (max_transfer_points < 1) {
    throw std::invalid_argument("ipg: max transfer points must be >= 1");
  }
  if (kernel_bandwidth && !(*kernel_bandwidth > 0.0)) {
    throw std::invalid_argument("ipg: kernel bandwidth must be > 0");
  }
}

LatentTargetSet build_latent_targets(
    const tca::TcaModel& model, const std::vector<ObjectiveVector>& pof_prev) {
  const tca::TcaMapper mapper(model);
  LatentTargetSet out;
  out.targets.reserve(pof_prev.size());
  for (const auto& p : pof_prev) {
    std::vector<double> latent(static_cast<std::size_t>(mapper.latent_dim()));
    mapper.map(p.data(), p.size(), latent.data());
    out.targets.push_back(std::move(latent));
  }
  return out;
}

namespace {

double latent_objective(const bench::DynamicProblem& problem, double t,
                        const tca::TcaMapper& mapper, const double* target,
                        const DecisionVector& x, bench::EvalCounter* counter,
                        std::vector<double>& latent_scratch) {
  const ObjectiveVector f = bench::counted_evaluate(problem, x, t, counter);
  mapper.map(f.data(), f.size(), latent_scratch.data());
  return kernels::ops().squared_distance(latent_scratch.data(), target,
                                         latent_scratch.size());
}

}  // namespace

DecisionVector inner_minimize(const bench::DynamicProblem& problem, double t,
                              const tca::TcaMapper& mapper,
                              const double* latent_target,
                              std::size_t latent_len, int budget,
                              util::Rng& rng, const DecisionVector* start,
                              bench::EvalCounter* counter, double* final_g) {
  if (budget < 1) throw std::invalid_argument("inner_minimize: budget >= 1");
  if (static_cast<int>(latent_len) != mapper.latent_dim()) {
    throw std::invalid_argument("inner_minimize: latent target length mismatch");
  }
  const bench::Bounds& bounds = problem.bounds();
  const int dim = problem.decision_dim();

  std::vector<double> latent_scratch(latent_len);
  int evals = 0;
  DecisionVector best;
  double best_g = std::numeric_limits<double>::infinity();

  auto try_point = [&](const DecisionVector& x) {
    ++evals;
    const double g = latent_objective(problem, t, mapper, latent_target, x,
                                      counter, latent_scratch);
    if (g < best_g) {
      best_g = g;
      best = x;
      return true;
    }
    return false;
  };

  if (start != nullptr) try_point(*start);
  for (int probe = 0; probe < 8 && evals < budget; ++probe) {
    DecisionVector x(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      x[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
    }
    try_point(x);
  }

  // Compass search around the incumbent; halve the step when a full sweep
  // fails to improve.
  std::vector<double> base_step(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    base_step[j] = 0.25 * (bounds.upper[j] - bounds.lower[j]);
  }
  double step_scale = 1.0;
  while (evals < budget && step_scale > 1e-9) {
    bool improved = false;
    for (int j = 0; j < dim && evals < budget; ++j) {
      for (const double dir : {1.0, -1.0}) {
        if (evals >= budget) break;
        DecisionVector x = best;
        x[j] += dir * base_step[j] * step_scale;
        if (x[j] < bounds.lower[j]) x[j] = bounds.lower[j];
        if (x[j] > bounds.upper[j]) x[j] = bounds.upper[j];
        if (x[j] == best[j]) continue;
        if (try_point(x)) {
          improved = true;
          break;  // re-center on the new incumbent before probing further
        }
      }
    }
    if (!improved) step_scale *= 0.5;
  }

  if (final_g != nullptr) *final_g = best_g;
  return best;
}

std::vector<DecisionVector> tr_ipg(const bench::DynamicProblem& problem,
                                   double t_prev, double t_next,
                                   const std::vector<ObjectiveVector>& pof_prev,
                                   const IpgConfig& cfg, std::uint64_t seed,
                                   bench::EvalCounter* counter,
                                   IpgDebug* debug) {
  cfg.validate();
  if (pof_prev.empty()) {
    throw std::invalid_argument("tr_ipg: previous POF must be nonempty");
  }

  const util::Rng master(seed);
  util::Rng rng_source = master.spawn(1);
  util::Rng rng_target = master.spawn(2);
  util::Rng rng_subsample = master.spawn(3);
  util::Rng rng_fill = master.spawn(4);

  // Objective-space sample banks of the two environments: the transfer model
  // is always fit on objective vectors, never on decision vectors.
  std::vector<ObjectiveVector> source_objs;
  source_objs.reserve(static_cast<std::size_t>(cfg.source_samples));
  for (const auto& x :
       bench::sample_decision_space(problem, cfg.source_samples, rng_source)) {
    source_objs.push_back(bench::counted_evaluate(problem, x, t_prev, counter));
  }
  std::vector<ObjectiveVector> target_objs;
  target_objs.reserve(static_cast<std::size_t>(cfg.target_samples));
  for (const auto& x :
       bench::sample_decision_space(problem, cfg.target_samples, rng_target)) {
    target_objs.push_back(bench::counted_evaluate(problem, x, t_next, counter));
  }

  tca::KernelSpec kernel;
  kernel.kind = cfg.kernel_kind;
  if (cfg.kernel_kind == tca::KernelKind::kGaussian) {
    if (cfg.kernel_bandwidth) {
      kernel.bandwidth = *cfg.kernel_bandwidth;
    } else {
      std::vector<ObjectiveVector> bank = source_objs;
      bank.insert(bank.end(), target_objs.begin(), target_objs.end());
      kernel.bandwidth = tca::median_bandwidth(bank);
    }
  }

  const tca::TcaModel model =
      tca::tca_fit(source_objs, target_objs, kernel, cfg.latent_dim, cfg.mu);
  const tca::TcaMapper mapper(model);

  // Cap the number of mapped POF members; archives can outgrow the budget.
  std::vector<ObjectiveVector> pof = pof_prev;
  if (static_cast<int>(pof.size()) > cfg.max_transfer_points) {
    std::vector<std::size_t> idx(pof.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (int i = 0; i < cfg.max_transfer_points; ++i) {
      const int j =
          i + rng_subsample.uniform_int(static_cast<int>(idx.size()) - i);
      std::swap(idx[static_cast<std::size_t>(i)],
                idx[static_cast<std::size_t>(j)]);
    }
    idx.resize(static_cast<std::size_t>(cfg.max_transfer_points));
    std::sort(idx.begin(), idx.end());
    std::vector<ObjectiveVector> kept;
    kept.reserve(idx.size());
    for (std::size_t i : idx) kept.push_back(pof[i]);
    pof = std::move(kept);
  }

  LatentTargetSet latent_targets;
  latent_targets.targets.reserve(pof.size());
  for (const auto& p : pof) {
    if (static_cast<int>(p.size()) != mapper.point_dim()) {
      throw std::invalid_argument("tr_ipg: POF vector length mismatch");
    }
    std::vector<double> latent(static_cast<std::size_t>(cfg.latent_dim));
    mapper.map(p.data(), p.size(), latent.data());
    latent_targets.targets.push_back(std::move(latent));
  }

  std::vector<DecisionVector> transferred;
  std::vector<double> final_g(latent_targets.targets.size());
  transferred.reserve(latent_targets.targets.size());
  for (std::size_t i = 0; i < latent_targets.targets.size(); ++i) {
    util::Rng rng_i = master.spawn(1000 + i);
    transferred.push_back(inner_minimize(
        problem, t_next, mapper, latent_targets.targets[i].data(),
        latent_targets.targets[i].size(), cfg.inner_budget, rng_i, nullptr,
        counter, &final_g[i]));
  }

  std::vector<DecisionVector> pop;
  pop.reserve(static_cast<std::size_t>(cfg.target_pop_size));
  if (static_cast<int>(transferred.size()) >= cfg.target_pop_size) {
    // Keep the transfers that landed closest to their latent targets.
    std::vector<std::size_t> order(transferred.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return final_g[a] < final_g[b];
    });
    for (int i = 0; i < cfg.target_pop_size; ++i) {
      pop.push_back(transferred[order[static_cast<std::size_t>(i)]]);
    }
  } else {
    pop = transferred;
    const bench::Bounds& bounds = problem.bounds();
    while (static_cast<int>(pop.size()) < cfg.target_pop_size) {
      DecisionVector x(bounds.size());
      for (std::size_t j = 0; j < bounds.size(); ++j) {
        x[j] = rng_fill.uniform(bounds.lower[j], bounds.upper[j]);
      }
      pop.push_back(std::move(x));
    }
  }

  if (debug != nullptr) {
    debug->source_bank = std::move(source_objs);
    debug->target_bank = std::move(target_objs);
    debug->model = model;
    debug->targets = std::move(latent_targets);
    debug->final_g = std::move(final_g);
  }
  return pop;
}

}  // namespace trdmo::ipg
