#ifndef TRDMO_TRANSFER_IPG_HPP
#define TRDMO_TRANSFER_IPG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/tca/tca.hpp"
#include "trdmo/util/rng.hpp"

namespace trdmo::ipg {

using bench::DecisionVector;
using bench::ObjectiveVector;

struct IpgConfig {
  int source_samples = 100;   // decision-space samples evaluated under F_t
  int target_samples = 100;   // decision-space samples evaluated under F_{t+1}
  int latent_dim = 20;
  double mu = 0.5;
  int inner_budget = 500;     // objective evaluations per latent target
  int target_pop_size = 200;
  int max_transfer_points = 500;  // POF subsample cap before mapping
  tca::KernelKind kernel_kind = tca::KernelKind::kGaussian;
  // Gaussian bandwidth; when unset, the median pairwise distance over the
  // concatenated objective sample bank is used.
  std::optional<double> kernel_bandwidth;

  void validate() const;  // throws std::invalid_argument
};

/// Latent-space images of the previous front, one per mapped POF member, in
/// the same order.
struct LatentTargetSet {
  std::vector<std::vector<double>> targets;
};

LatentTargetSet build_latent_targets(
    const tca::TcaModel& model, const std::vector<ObjectiveVector>& pof_prev);

/// Bounded derivative-free minimizer for
///   g(x) = || map(F(x, t)) - latent_target ||^2.
/// Starts from `start` when given plus the best of eight uniform probes,
/// then runs a compass pattern search with shrinking steps. Never exceeds
/// `budget` objective evaluations; returns the best point seen (elitist, so
/// g(result) <= g(start) whenever start was evaluated).
DecisionVector inner_minimize(const bench::DynamicProblem& problem, double t,
                              const tca::TcaMapper& mapper,
                              const double* latent_target,
                              std::size_t latent_len, int budget,
                              util::Rng& rng,
                              const DecisionVector* start = nullptr,
                              bench::EvalCounter* counter = nullptr,
                              double* final_g = nullptr);

/// Optional per-call debug payload.
struct IpgDebug {
  std::vector<ObjectiveVector> source_bank;  // F_t over the source samples
  std::vector<ObjectiveVector> target_bank;  // F_{t+1} over the target samples
  tca::TcaModel model;
  LatentTargetSet targets;
  std::vector<double> final_g;  // one per mapped POF member
};

/// Transfer-seeded initial population for the environment at t_next, built
/// from the POF found at t_prev: fit a transfer model on objective-space
/// samples of the two environments, map each POF member to the latent
/// space, and invert each image by bounded single-objective minimization.
/// Returns exactly cfg.target_pop_size in-bounds decision vectors; when the
/// POF is smaller than the population the remainder is uniform random fill,
/// and when it is larger the transfers with the best final g are kept.
std::vector<DecisionVector> tr_ipg(const bench::DynamicProblem& problem,
                                   double t_prev, double t_next,
                                   const std::vector<ObjectiveVector>& pof_prev,
                                   const IpgConfig& cfg, std::uint64_t seed,
                                   bench::EvalCounter* counter = nullptr,
                                   IpgDebug* debug = nullptr);

}  // namespace trdmo::ipg

#endif
