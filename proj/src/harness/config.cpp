#include "trdmo/harness/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/moea/trdmoea.hpp"

namespace trdmo::harness {

void RunConfig::validate() const {
  bench::problem_by_name(problem);          // unknown problem -> throws
  moea::parse_algorithm_id(algorithm);      // unknown algorithm -> throws
  const auto& env = bench::environment_config(config_id);
  if (population < 4) {
    throw std::invalid_argument("config.population: must be >= 4");
  }
  if (generations < 0) {
    throw std::invalid_argument("config.generations: must be >= 0");
  }
  if (changes && (*changes < 1 || *changes > env.time_model.change_count())) {
    throw std::invalid_argument(
        "config.changes: must be in [1, schedule length]");
  }
  if (seeds.empty()) {
    throw std::invalid_argument("config.seeds: need at least one seed");
  }
  if (tca_dim < 1 || tca_dim > source_samples + target_samples) {
    throw std::invalid_argument(
        "config.tca_dim: must be in [1, source_samples + target_samples]");
  }
  if (!(tca_mu > 0.0)) throw std::invalid_argument("config.tca_mu: must be > 0");
  if (kernel != "gaussian" && kernel != "linear") {
    throw std::invalid_argument("config.kernel: must be gaussian or linear");
  }
  if (kernel_bandwidth && !(*kernel_bandwidth > 0.0)) {
    throw std::invalid_argument("config.kernel_bandwidth: must be > 0");
  }
  if (source_samples < 2) {
    throw std::invalid_argument("config.source_samples: must be >= 2");
  }
  if (target_samples < 2) {
    throw std::invalid_argument("config.target_samples: must be >= 2");
  }
  if (inner_budget < 1) {
    throw std::invalid_argument("config.inner_budget: must be >= 1");
  }
  if (max_transfer < 1) {
    throw std::invalid_argument("config.max_transfer: must be >= 1");
  }
  if (!(react_epsilon > 0.0 && react_epsilon < 1.0)) {
    throw std::invalid_argument("config.react_epsilon: must be in (0, 1)");
  }
  if (pof_samples_2d < 2 || pof_samples_3d < 2) {
    throw std::invalid_argument("config.pof_samples: must be >= 2");
  }
  if (timeout_seconds < 0.0) {
    throw std::invalid_argument("config.timeout_seconds: must be >= 0");
  }
  if (out_dir.empty()) {
    throw std::invalid_argument("config.out_dir: must be nonempty");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["problem"] = problem;
  j["algorithm"] = algorithm;
  j["config"] = config_id;
  j["population"] = population;
  j["generations"] = generations;
  if (changes) {
    j["changes"] = *changes;
  } else {
    j["changes"] = nullptr;
  }
  j["seeds"] = seeds;
  j["tca_dim"] = tca_dim;
  j["tca_mu"] = tca_mu;
  j["kernel"] = kernel;
  if (kernel_bandwidth) {
    j["kernel_bandwidth"] = *kernel_bandwidth;
  } else {
    j["kernel_bandwidth"] = nullptr;
  }
  j["source_samples"] = source_samples;
  j["target_samples"] = target_samples;
  j["inner_budget"] = inner_budget;
  j["max_transfer"] = max_transfer;
  j["react_epsilon"] = react_epsilon;
  j["pof_samples_2d"] = pof_samples_2d;
  j["pof_samples_3d"] = pof_samples_3d;
  j["timeout_seconds"] = timeout_seconds;
  j["out_dir"] = out_dir;
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  static const std::set<std::string> known = {
      "problem",        "algorithm",      "config",
      "population",     "generations",    "changes",
      "seeds",          "tca_dim",        "tca_mu",
      "kernel",         "kernel_bandwidth", "source_samples",
      "target_samples", "inner_budget",   "max_transfer",
      "react_epsilon",  "pof_samples_2d", "pof_samples_3d",
      "timeout_seconds", "out_dir"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw std::invalid_argument("config: unknown key \"" + it.key() + "\"");
    }
  }
  RunConfig cfg;
  auto get = [&](const char* key, auto& slot) {
    if (j.contains(key) && !j.at(key).is_null()) {
      try {
        slot = j.at(key).get<std::decay_t<decltype(slot)>>();
      } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument(std::string("config.") + key +
                                    ": wrong type");
      }
    }
  };
  get("problem", cfg.problem);
  get("algorithm", cfg.algorithm);
  get("config", cfg.config_id);
  get("population", cfg.population);
  get("generations", cfg.generations);
  if (j.contains("changes") && !j.at("changes").is_null()) {
    cfg.changes = j.at("changes").get<int>();
  }
  get("seeds", cfg.seeds);
  get("tca_dim", cfg.tca_dim);
  get("tca_mu", cfg.tca_mu);
  get("kernel", cfg.kernel);
  if (j.contains("kernel_bandwidth") && !j.at("kernel_bandwidth").is_null()) {
    cfg.kernel_bandwidth = j.at("kernel_bandwidth").get<double>();
  }
  get("source_samples", cfg.source_samples);
  get("target_samples", cfg.target_samples);
  get("inner_budget", cfg.inner_budget);
  get("max_transfer", cfg.max_transfer);
  get("react_epsilon", cfg.react_epsilon);
  get("pof_samples_2d", cfg.pof_samples_2d);
  get("pof_samples_3d", cfg.pof_samples_3d);
  get("timeout_seconds", cfg.timeout_seconds);
  get("out_dir", cfg.out_dir);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error in " + path + ": " +
                                e.what());
  }
  RunConfig cfg = RunConfig::from_json(j);
  cfg.validate();
  return cfg;
}

}  // namespace trdmo::harness
