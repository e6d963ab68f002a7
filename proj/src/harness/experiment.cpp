#include "trdmo/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/kernels/kernels.hpp"
#include "trdmo/metrics/metrics.hpp"
#include "trdmo/moea/trdmoea.hpp"

namespace trdmo::harness {

namespace {

constexpr const char* kVersionTag = "trdmo 0.1.0";

std::string version_string() {
  return std::string(kVersionTag) + " kernels=" +
         kernels::isa_name(kernels::active_isa());
}

std::string iso_now() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

moea::TrdmoeaSettings settings_from(const RunConfig& cfg) {
  moea::TrdmoeaSettings s;
  s.population = cfg.population;
  s.generations = cfg.generations;
  s.change_count = cfg.changes;
  s.timeout_seconds = cfg.timeout_seconds;
  s.ipg.source_samples = cfg.source_samples;
  s.ipg.target_samples = cfg.target_samples;
  s.ipg.latent_dim = cfg.tca_dim;
  s.ipg.mu = cfg.tca_mu;
  s.ipg.inner_budget = cfg.inner_budget;
  s.ipg.max_transfer_points = cfg.max_transfer;
  s.ipg.kernel_kind = cfg.kernel == "linear" ? tca::KernelKind::kLinear
                                             : tca::KernelKind::kGaussian;
  s.ipg.kernel_bandwidth = cfg.kernel_bandwidth;
  return s;
}

}  // namespace

RunRecord run_single(const RunConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto& problem = bench::problem_by_name(cfg.problem);
  const auto& env = bench::environment_config(cfg.config_id);
  const int pof_samples = problem.objective_count() == 3 ? cfg.pof_samples_3d
                                                         : cfg.pof_samples_2d;

  const auto outcomes =
      moea::trdmoea_run(problem, cfg.algorithm, env, settings_from(cfg), seed);

  // Shared references: the true front at each scheduled t, and a fixed
  // hypervolume reference spanning their union with a 10% margin.
  std::vector<std::vector<bench::ObjectiveVector>> references;
  references.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    references.push_back(problem.true_pof(outcome.t, pof_samples));
  }
  const std::size_t m = static_cast<std::size_t>(problem.objective_count());
  std::vector<double> lo(m, 0.0), hi(m, 0.0);
  bool first = true;
  for (const auto& ref_front : references) {
    for (const auto& v : ref_front) {
      for (std::size_t j = 0; j < m; ++j) {
        if (first || v[j] < lo[j]) lo[j] = v[j];
        if (first || v[j] > hi[j]) hi[j] = v[j];
      }
      first = false;
    }
  }
  bench::ObjectiveVector hv_ref(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double span = hi[j] - lo[j];
    hv_ref[j] = hi[j] + 0.1 * (span > 0.0 ? span : std::max(std::abs(hi[j]), 1.0));
  }

  RunRecord record;
  record.version = version_string();
  record.config = cfg;
  record.seed = seed;
  record.hv_ref = hv_ref.values;

  std::vector<double> igd_series, hv_series;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& outcome = outcomes[k];
    std::vector<bench::ObjectiveVector> archive_f;
    archive_f.reserve(outcome.archive.size());
    for (const auto& ind : outcome.archive) archive_f.push_back(ind.f);

    ChangeRecord cr;
    cr.index = outcome.index;
    cr.t = outcome.t;
    cr.igd = metrics::igd(references[k], archive_f);
    cr.hv = metrics::hypervolume(archive_f, hv_ref);
    cr.evals = outcome.evals;
    cr.transfer_source_evals = outcome.transfer_source_evals;
    cr.seconds = outcome.seconds;
    for (const auto& f : archive_f) cr.archive.push_back(f.values);
    igd_series.push_back(cr.igd);
    hv_series.push_back(cr.hv);
    record.total_seconds += outcome.seconds;
    record.changes.push_back(std::move(cr));
  }
  record.migd = metrics::migd(igd_series);
  try {
    record.acc = metrics::accuracy(hv_series);
    if (record.acc.size() >= 2) {
      const auto reacts = metrics::react_series(record.acc, cfg.react_epsilon);
      for (const auto& r : reacts) {
        record.react_steps.push_back(r.steps);
        record.react_capped = record.react_capped || r.capped;
      }
      record.mreact = metrics::mreact(reacts);
    }
  } catch (const std::domain_error&) {
    // all-zero hypervolume series: leave accuracy/react unset
  }
  record.written_at = iso_now();
  return record;
}

std::vector<RunRecord> run_experiment(const RunConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> records;
  records.reserve(cfg.seeds.size());
  for (const std::uint64_t seed : cfg.seeds) {
    RunRecord record = run_single(cfg, seed);
    write_record(record, cfg.out_dir);
    records.push_back(std::move(record));
  }
  return records;
}

namespace {

struct Cell {
  std::string problem, algorithm, config;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRDMO_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace

BatchSummary run_batch(const RunConfig& base, const BatchOptions& options) {
  namespace fs = std::filesystem;
  const auto problems =
      options.problems.empty() ? bench::problem_names() : options.problems;
  const auto algorithms = options.algorithms.empty() ? moea::algorithm_ids()
                                                     : options.algorithms;
  std::vector<std::string> configs = options.configs;
  if (configs.empty()) {
    for (const auto& c : bench::environment_configs()) configs.push_back(c.id);
  }

  std::vector<Cell> cells;
  for (const auto& p : problems) {
    for (const auto& a : algorithms) {
      for (const auto& c : configs) cells.push_back({p, a, c});
    }
  }

  BatchSummary summary;
  std::vector<std::string> cell_status(cells.size());
  std::mutex mu;
  std::size_t next = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t idx;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= cells.size()) return;
        idx = next++;
      }
      const Cell& cell = cells[idx];
      RunConfig cfg = base;
      cfg.problem = cell.problem;
      cfg.algorithm = cell.algorithm;
      cfg.config_id = cell.config;
      bool done = true;
      for (const auto seed : cfg.seeds) {
        if (!fs::exists(fs::path(cfg.out_dir) / record_filename(cfg, seed))) {
          done = false;
          break;
        }
      }
      if (done && !options.force) {
        cell_status[idx] = "skipped";
        continue;
      }
      try {
        run_experiment(cfg);
        cell_status[idx] = "complete";
      } catch (const std::exception& e) {
        cell_status[idx] = std::string("failed: ") + e.what();
      }
    }
  };

  const int workers =
      std::min<int>(resolve_workers(options.workers),
                    static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  nlohmann::json manifest;
  manifest["seeds"] = base.seeds;
  auto& jcells = manifest["cells"] = nlohmann::json::object();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string key =
        cells[i].problem + "|" + cells[i].algorithm + "|" + cells[i].config;
    const std::string& status = cell_status[i];
    jcells[key] = status;
    if (status == "complete" || status == "skipped") {
      status == "complete" ? ++summary.completed : ++summary.skipped;
    } else {
      ++summary.failed;
      summary.failures.push_back(key + ": " + status);
    }
  }
  fs::create_directories(base.out_dir);
  std::ofstream out(fs::path(base.out_dir) / "manifest.json");
  out << manifest.dump(1) << "\n";
  return summary;
}

}  // namespace trdmo::harness
