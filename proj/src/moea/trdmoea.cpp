#include "trdmo/moea/trdmoea.hpp"

#include <chrono>
#include <stdexcept>

namespace trdmo::moea {

const std::vector<std::string>& moa_ids() {
  static const std::vector<std::string> ids = {"nsga2", "mopso", "rmmeda"};
  return ids;
}

std::vector<Individual> run_moa(const std::string& moa_id,
                                const bench::DynamicProblem& problem, double t,
                                std::vector<bench::DecisionVector> init,
                                int generations, util::Rng& rng,
                                bench::EvalCounter* counter,
                                const MoaParams& params) {
  if (moa_id == "nsga2") {
    return nsga2_run(problem, t, std::move(init), generations, rng, counter,
                     params.nsga2);
  }
  if (moa_id == "mopso") {
    return mopso_run(problem, t, std::move(init), generations, rng, counter,
                     params.mopso);
  }
  if (moa_id == "rmmeda") {
    return rmmeda_run(problem, t, std::move(init), generations, rng, counter,
                      params.rmmeda);
  }
  throw std::invalid_argument("unknown optimizer id: " + moa_id);
}

AlgorithmSpec parse_algorithm_id(const std::string& id) {
  AlgorithmSpec spec;
  std::string base = id;
  if (id.rfind("tr-", 0) == 0) {
    spec.transfer = true;
    base = id.substr(3);
  }
  for (const auto& known : moa_ids()) {
    if (base == known) {
      spec.moa_id = base;
      return spec;
    }
  }
  throw std::invalid_argument("unknown algorithm id: " + id);
}

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& base : moa_ids()) {
      v.push_back(base);
      v.push_back("tr-" + base);
    }
    return v;
  }();
  return ids;
}

std::vector<ChangeOutcome> trdmoea_run(const bench::DynamicProblem& problem,
                                       const std::string& algorithm_id,
                                       const bench::EnvironmentConfig& env,
                                       const TrdmoeaSettings& settings,
                                       std::uint64_t seed) {
  const AlgorithmSpec spec = parse_algorithm_id(algorithm_id);
  env.time_model.validate();
  if (settings.population < 2) {
    throw std::invalid_argument("trdmoea_run: population must be >= 2");
  }
  if (settings.generations < 0) {
    throw std::invalid_argument("trdmoea_run: generations must be >= 0");
  }
  int changes = env.time_model.change_count();
  if (settings.change_count) {
    if (*settings.change_count < 1 || *settings.change_count > changes) {
      throw std::invalid_argument(
          "trdmoea_run: change count override out of range");
    }
    changes = *settings.change_count;
  }

  ipg::IpgConfig ipg_cfg = settings.ipg;
  ipg_cfg.target_pop_size = settings.population;
  if (spec.transfer) ipg_cfg.validate();

  const util::Rng master(seed);
  bench::EvalCounter counter;
  std::vector<ChangeOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(changes));

  const auto t_start = std::chrono::steady_clock::now();
  std::vector<bench::ObjectiveVector> prev_front;
  double prev_t = 0.0;

  for (int k = 0; k < changes; ++k) {
    const auto change_start = std::chrono::steady_clock::now();
    if (settings.timeout_seconds > 0.0) {
      const std::chrono::duration<double> elapsed = change_start - t_start;
      if (elapsed.count() > settings.timeout_seconds) {
        throw TimeoutError(problem.name() + "/" + algorithm_id +
                           ": run exceeded the time budget");
      }
    }

    const double t = bench::time_of_change(k, env.time_model);
    std::vector<bench::DecisionVector> init;
    long long source_evals = 0;
    if (k == 0 || !spec.transfer) {
      util::Rng rng_init = master.spawn(20000u + static_cast<std::uint64_t>(k));
      init = bench::sample_decision_space(problem, settings.population,
                                          rng_init);
    } else {
      const long long prev_before = counter.at(prev_t);
      init = ipg::tr_ipg(problem, prev_t, t, prev_front, ipg_cfg,
                         util::mix64(seed, 30000u + static_cast<std::uint64_t>(k)),
                         &counter);
      source_evals = counter.at(prev_t) - prev_before;
    }

    util::Rng rng_moa = master.spawn(10000u + static_cast<std::uint64_t>(k));
    std::vector<Individual> archive =
        run_moa(spec.moa_id, problem, t, std::move(init), settings.generations,
                rng_moa, &counter, settings.moa);

    prev_front.clear();
    prev_front.reserve(archive.size());
    for (const auto& ind : archive) prev_front.push_back(ind.f);
    prev_t = t;

    ChangeOutcome outcome;
    outcome.index = k;
    outcome.t = t;
    outcome.archive = std::move(archive);
    // Snapshot now: the next segment's source-bank sampling will add more
    // evaluations under this t, accounted there as transfer_source_evals.
    outcome.evals = counter.at(t);
    outcome.transfer_source_evals = source_evals;
    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      change_start)
            .count();
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace trdmo::moea
