#ifndef TRDMO_MOEA_TRDMOEA_HPP
#define TRDMO_MOEA_TRDMOEA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/moea/algorithms.hpp"
#include "trdmo/transfer/ipg.hpp"

namespace trdmo::moea {

/// Full algorithm id: a base optimizer, optionally transfer-seeded via the
/// "tr-" prefix (e.g. "nsga2", "tr-mopso").
struct AlgorithmSpec {
  std::string moa_id;
  bool transfer = false;
};

AlgorithmSpec parse_algorithm_id(const std::string& id);
const std::vector<std::string>& algorithm_ids();

struct TrdmoeaSettings {
  int population = 200;
  int generations = 50;
  std::optional<int> change_count;  // default: the config's full schedule
  ipg::IpgConfig ipg;               // target_pop_size is overridden to match
  MoaParams moa;
  double timeout_seconds = 0.0;     // 0 disables the guard
};

struct ChangeOutcome {
  int index = 0;
  double t = 0.0;
  std::vector<Individual> archive;  // final first front at this t
  // Objective evaluations at this change's t during its own segment
  // (transfer seeding of this change plus the optimizer generations).
  long long evals = 0;
  // Evaluations this segment made under the previous t to build the
  // transfer model's source bank (0 for change 0 and non-transfer runs).
  long long transfer_source_evals = 0;
  double seconds = 0.0;
};

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The outer dynamic loop: solve change 0 from a uniform random population;
/// for every later change seed the optimizer either with the transfer-based
/// generator (tr- ids) or with a fresh uniform random population, then run G
/// generations at the fixed new t. Returns one archive per change, in order.
std::vector<ChangeOutcome> trdmoea_run(const bench::DynamicProblem& problem,
                                       const std::string& algorithm_id,
                                       const bench::EnvironmentConfig& env,
                                       const TrdmoeaSettings& settings,
                                       std::uint64_t seed);

}  // namespace trdmo::moea

#endif
