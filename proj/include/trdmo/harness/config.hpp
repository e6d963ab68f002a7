#ifndef TRDMO_HARNESS_CONFIG_HPP
#define TRDMO_HARNESS_CONFIG_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

namespace trdmo::harness {

/// One experiment cell: a problem, an algorithm id, an environment config,
/// and the run parameters. Defaults follow the benchmark protocol
/// (population 200, 50 generations per change, latent dimension 20,
/// mu = 0.5, Gaussian kernel with median bandwidth).
struct RunConfig {
  std::string problem;
  std::string algorithm = "tr-nsga2";
  std::string config_id = "C1";

  int population = 200;
  int generations = 50;
  std::optional<int> changes;  // override; default: full schedule

  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};

  // transfer model
  int tca_dim = 20;
  double tca_mu = 0.5;
  std::string kernel = "gaussian";  // "gaussian" | "linear"
  std::optional<double> kernel_bandwidth;  // unset: median heuristic

  // initial population generator
  int source_samples = 100;
  int target_samples = 100;
  int inner_budget = 500;
  int max_transfer = 500;

  double react_epsilon = 0.1;

  // IGD reference density (2-objective / 3-objective problems)
  int pof_samples_2d = 500;
  int pof_samples_3d = 1089;

  double timeout_seconds = 0.0;
  std::string out_dir = "runs";

  void validate() const;  // throws std::invalid_argument, field by field
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

/// Parse a config file (JSON). Unknown keys are rejected; missing keys keep
/// their defaults.
RunConfig load_config(const std::string& path);

}  // namespace trdmo::harness

#endif
