#ifndef TRDMO_MOEA_ALGORITHMS_HPP
#define TRDMO_MOEA_ALGORITHMS_HPP

#include <string>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/moea/individual.hpp"
#include "trdmo/util/rng.hpp"

namespace trdmo::moea {

struct Nsga2Params {
  double crossover_prob = 0.9;
  double crossover_eta = 15.0;
  double mutation_eta = 20.0;
  // per-variable mutation probability; <= 0 means 1/n
  double mutation_prob = -1.0;
};

struct MopsoParams {
  double inertia = 0.4;
  double cognitive = 1.0;  // pull toward the particle's own best
  double social = 1.0;     // pull toward the archive leader
  int grid_divisions = 30;
  double mutation_rate = 0.5;  // initial fraction mutated, decays to 0
};

struct RmmedaParams {
  int clusters = 5;
  double extension = 0.25;  // manifold sampling box extension
};

struct MoaParams {
  Nsga2Params nsga2;
  MopsoParams mopso;
  RmmedaParams rmmeda;
};

/// NSGA-II: binary tournament on (rank, crowding), simulated binary
/// crossover, polynomial mutation, (mu+lambda) environmental selection.
/// Evolves `init` for `generations` at fixed t and returns the final first
/// front. Uses at most N*(generations+1) objective evaluations.
std::vector<Individual> nsga2_run(const bench::DynamicProblem& problem,
                                  double t,
                                  std::vector<bench::DecisionVector> init,
                                  int generations, util::Rng& rng,
                                  bench::EvalCounter* counter = nullptr,
                                  const Nsga2Params& params = {});

/// Particle swarm variant with an external nondominated archive and
/// adaptive-grid leader selection / truncation. Same budget contract as
/// nsga2_run; returns the archive (at most N members).
std::vector<Individual> mopso_run(const bench::DynamicProblem& problem,
                                  double t,
                                  std::vector<bench::DecisionVector> init,
                                  int generations, util::Rng& rng,
                                  bench::EvalCounter* counter = nullptr,
                                  const MopsoParams& params = {});

/// Regularity-model EDA: local-PCA manifold model of the population,
/// offspring sampled around the model, NSGA-II-style selection.
std::vector<Individual> rmmeda_run(const bench::DynamicProblem& problem,
                                   double t,
                                   std::vector<bench::DecisionVector> init,
                                   int generations, util::Rng& rng,
                                   bench::EvalCounter* counter = nullptr,
                                   const RmmedaParams& params = {});

/// Base optimizer ids.
const std::vector<std::string>& moa_ids();

/// Dispatch by base id ("nsga2", "mopso", "rmmeda").
std::vector<Individual> run_moa(const std::string& moa_id,
                                const bench::DynamicProblem& problem, double t,
                                std::vector<bench::DecisionVector> init,
                                int generations, util::Rng& rng,
                                bench::EvalCounter* counter,
                                const MoaParams& params);

}  // namespace trdmo::moea

#endif
