// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Thresholds and tolerances are pinned in code.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/harness/experiment.hpp"
#include "trdmo/kernels/kernels.hpp"
#include "trdmo/metrics/metrics.hpp"
#include "trdmo/moea/dominance.hpp"
#include "trdmo/moea/trdmoea.hpp"
#include "trdmo/tca/tca.hpp"
#include "trdmo/util/rng.hpp"

using namespace trdmo;
using bench::ObjectiveVector;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<ObjectiveVector> gaussian_cloud(util::Rng& rng, int count, int dim,
                                            double shift) {
  std::vector<ObjectiveVector> pts;
  for (int i = 0; i < count; ++i) {
    ObjectiveVector v(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
      v[static_cast<std::size_t>(j)] = rng.normal() + shift;
    }
    pts.push_back(std::move(v));
  }
  return pts;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome criterion1_kernel_tca() {
  const auto start = std::chrono::steady_clock::now();
  util::Rng master(101);
  double worst_mmd_gap = 0.0, worst_self = 0.0, worst_residual = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    util::Rng rng = master.spawn(trial);
    const auto xs = gaussian_cloud(rng, 10, 3, 0.0);
    const auto ys = gaussian_cloud(rng, 10, 3, rng.uniform(0.2, 1.0));
    std::vector<ObjectiveVector> bank = xs;
    bank.insert(bank.end(), ys.begin(), ys.end());
    const tca::KernelSpec kernel{tca::KernelKind::kGaussian,
                                 tca::median_bandwidth(bank)};

    // trace form versus the explicit double sum
    double xx = 0, yy = 0, xy = 0;
    for (const auto& a : xs) {
      for (const auto& b : xs) xx += tca::kernel_eval(kernel, a, b);
      for (const auto& b : ys) xy += tca::kernel_eval(kernel, a, b);
    }
    for (const auto& a : ys) {
      for (const auto& b : ys) yy += tca::kernel_eval(kernel, a, b);
    }
    const double double_sum = xx / 100.0 + yy / 100.0 - 2.0 * xy / 100.0;
    worst_mmd_gap = std::max(
        worst_mmd_gap, std::abs(tca::mmd(xs, ys, kernel) - double_sum));
    worst_self = std::max(worst_self, std::abs(tca::mmd(xs, xs, kernel)));

    // eigen-residual against the dense operator
    const double mu = 0.5;
    const auto model = tca::tca_fit(xs, ys, kernel, 5, mu);
    const Eigen::MatrixXd gram = tca::gram_matrix(bank, kernel);
    const Eigen::MatrixXd op =
        Eigen::PartialPivLU<Eigen::MatrixXd>(
            gram * tca::scaling_matrix(10, 10) * gram +
            mu * Eigen::MatrixXd::Identity(20, 20))
            .solve(gram * tca::centering_matrix(20) * gram);
    for (int c = 0; c < 5; ++c) {
      const Eigen::VectorXd w = model.w.col(c);
      const double lambda = model.eigenvalues[static_cast<std::size_t>(c)];
      worst_residual =
          std::max(worst_residual, (op * w - lambda * w).norm());
    }
  }
  const double elapsed = seconds_since(start);
  const bool ok = worst_mmd_gap <= 1e-10 && worst_self <= 1e-12 &&
                  worst_residual < 1e-6 && elapsed < 5.0;
  return {ok, "trace-vs-sum gap " + fmt("%.2e", worst_mmd_gap) +
                  ", self-MMD " + fmt("%.2e", worst_self) +
                  ", eigen residual " + fmt("%.2e", worst_residual) + ", " +
                  fmt("%.2f", elapsed) + "s"};
}

Outcome criterion2_metric_oracles() {
  const auto start = std::chrono::steady_clock::now();
  util::Rng master(202);
  double worst_igd = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    util::Rng rng = master.spawn(trial);
    const int m = 2 + rng.uniform_int(2);
    const auto ref = gaussian_cloud(rng, 1 + rng.uniform_int(50), m, 0.0);
    const auto got = gaussian_cloud(rng, 1 + rng.uniform_int(50), m, 0.3);
    double total = 0.0;
    for (const auto& r : ref) {
      double best = 1e300;
      for (const auto& g : got) {
        double acc = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) {
          acc += (r[j] - g[j]) * (r[j] - g[j]);
        }
        best = std::min(best, acc);
      }
      total += std::sqrt(best);
    }
    worst_igd = std::max(
        worst_igd,
        std::abs(metrics::igd(ref, got) - total / static_cast<double>(ref.size())));
  }

  double worst_hv = 0.0;
  const ObjectiveVector ref2{1.0, 1.0};
  for (int trial = 0; trial < 200; ++trial) {
    util::Rng rng = master.spawn(1000 + trial);
    std::vector<ObjectiveVector> pts;
    const int count = 1 + rng.uniform_int(8);
    for (int i = 0; i < count; ++i) {
      pts.push_back(ObjectiveVector{rng.uniform(), rng.uniform()});
    }
    double union_vol = 0.0;
    for (unsigned mask = 1; mask < (1u << count); ++mask) {
      double c1 = 0.0, c2 = 0.0;
      for (int i = 0; i < count; ++i) {
        if (mask & (1u << i)) {
          c1 = std::max(c1, pts[static_cast<std::size_t>(i)][0]);
          c2 = std::max(c2, pts[static_cast<std::size_t>(i)][1]);
        }
      }
      const double vol = (1.0 - c1) * (1.0 - c2);
      union_vol += __builtin_popcount(mask) % 2 == 1 ? vol : -vol;
    }
    worst_hv = std::max(worst_hv,
                        std::abs(metrics::hypervolume(pts, ref2) - union_vol));
  }

  const std::map<std::string, double> published_row = {
      {"C1", 0.0533}, {"C2", 0.0524}, {"C3", 0.0522}, {"C4", 0.0527},
      {"C5", 0.0500}, {"C6", 0.0501}, {"C7", 0.0523}, {"C8", 0.0529}};
  const double dmigd_gap = std::abs(metrics::dmigd(published_row) - 0.0520);

  const double elapsed = seconds_since(start);
  const bool ok = worst_igd <= 1e-12 && worst_hv <= 1e-12 &&
                  dmigd_gap < 5e-4 && elapsed < 10.0;
  return {ok, "igd gap " + fmt("%.2e", worst_igd) + ", hv gap " +
                  fmt("%.2e", worst_hv) + ", published DMIGD gap " +
                  fmt("%.2e", dmigd_gap) + ", " + fmt("%.2f", elapsed) + "s"};
}

Outcome criterion3_sorting() {
  const auto start = std::chrono::steady_clock::now();
  util::Rng master(303);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    util::Rng rng = master.spawn(trial);
    const int count = 2 + rng.uniform_int(49);
    const int m = 2 + rng.uniform_int(2);
    std::vector<moea::Individual> pop;
    for (int i = 0; i < count; ++i) {
      moea::Individual ind;
      ind.f = ObjectiveVector(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) {
        // coarse values provoke ties and duplicates
        ind.f[static_cast<std::size_t>(j)] = rng.uniform_int(8) / 4.0;
      }
      pop.push_back(std::move(ind));
    }
    auto fast = moea::fast_nondominated_sort(pop);

    std::vector<int> remaining(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
      remaining[i] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> brute;
    while (!remaining.empty()) {
      std::vector<int> front, rest;
      for (int i : remaining) {
        bool dominated = false;
        for (int j : remaining) {
          if (j != i && moea::dominates(pop[static_cast<std::size_t>(j)],
                                        pop[static_cast<std::size_t>(i)])) {
            dominated = true;
            break;
          }
        }
        (dominated ? rest : front).push_back(i);
      }
      brute.push_back(front);
      remaining = rest;
    }
    bool equal = fast.size() == brute.size();
    for (std::size_t f = 0; equal && f < fast.size(); ++f) {
      std::sort(fast[f].begin(), fast[f].end());
      equal = fast[f] == brute[f];
    }
    if (!equal) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < 10.0,
          std::to_string(mismatches) + " mismatches in 200 populations, " +
              fmt("%.2f", elapsed) + "s"};
}

Outcome criterion4_time_model() {
  const auto& env = bench::environment_config("C1");
  moea::TrdmoeaSettings settings;
  settings.population = 8;
  settings.generations = 1;
  settings.ipg.source_samples = 8;
  settings.ipg.target_samples = 8;
  settings.ipg.latent_dim = 4;
  settings.ipg.inner_budget = 4;
  const auto outcomes = moea::trdmoea_run(bench::problem_by_name("FDA4"),
                                          "nsga2", env, settings, 11);
  bool ok = outcomes.size() == 20;
  for (std::size_t k = 0; ok && k < outcomes.size(); ++k) {
    ok = outcomes[k].t == static_cast<double>(k) / 10.0;
  }
  return {ok, std::to_string(outcomes.size()) + " changes, t = k/10 " +
                  (ok ? "exact" : "violated")};
}

// shared desk-scale protocol for criteria 5-7
struct DeskCell {
  std::string problem, algorithm;
  std::uint64_t seed;
  double migd = 0.0;
  double mreact = 0.0;
};

std::vector<DeskCell> run_desk_matrix() {
  std::vector<DeskCell> cells;
  for (const char* prob : {"FDA4", "HE7", "DMOP2_iso"}) {
    for (const char* algo : {"nsga2", "tr-nsga2"}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cells.push_back({prob, algo, seed});
      }
    }
  }
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
      harness::RunConfig cfg;
      cfg.problem = cells[idx].problem;
      cfg.algorithm = cells[idx].algorithm;
      cfg.config_id = "C1";
      cfg.population = 100;
      cfg.generations = 30;
      cfg.changes = 10;
      cfg.react_epsilon = 0.1;
      const auto record = harness::run_single(cfg, cells[idx].seed);
      cells[idx].migd = record.migd;
      cells[idx].mreact = record.mreact ? *record.mreact : -1.0;
    }
  };
  const unsigned workers =
      std::min<unsigned>(std::thread::hardware_concurrency(), 8u);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return cells;
}

double desk_median(const std::vector<DeskCell>& cells,
                   const std::string& problem, const std::string& algorithm,
                   bool mreact = false) {
  std::vector<double> values;
  for (const auto& c : cells) {
    if (c.problem == problem && c.algorithm == algorithm) {
      values.push_back(mreact ? c.mreact : c.migd);
    }
  }
  std::sort(values.begin(), values.end());
  return values[values.size() / 2];
}

Outcome criterion5_directional(const std::vector<DeskCell>& cells) {
  std::string detail;
  bool ok = true;
  for (const char* prob : {"FDA4", "HE7"}) {
    const double base = desk_median(cells, prob, "nsga2");
    const double treated = desk_median(cells, prob, "tr-nsga2");
    const double roc = metrics::roc(base, treated);
    ok = ok && roc >= 20.0;
    detail += std::string(prob) + " base " + fmt("%.4f", base) + " tr " +
              fmt("%.4f", treated) + " roc " + fmt("%.2f", roc) + "%; ";
  }
  return {ok, detail + "threshold >= 20%"};
}

Outcome criterion6_non_degradation(const std::vector<DeskCell>& cells) {
  const double base = desk_median(cells, "DMOP2_iso", "nsga2");
  const double treated = desk_median(cells, "DMOP2_iso", "tr-nsga2");
  const double roc = metrics::roc(base, treated);
  return {std::abs(roc) <= 15.0,
          "DMOP2_iso base " + fmt("%.4f", base) + " tr " +
              fmt("%.4f", treated) + " |roc| " + fmt("%.2f", std::abs(roc)) +
              "% (limit 15%)"};
}

Outcome criterion7_react(const std::vector<DeskCell>& cells) {
  // property: non-decreasing accuracy recovers in one step, everywhere
  util::Rng rng(707);
  bool props = true;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> acc = {rng.uniform(0.05, 0.2)};
    for (int i = 1; i < 12; ++i) {
      acc.push_back(std::min(1.0, acc.back() + rng.uniform(0.0, 0.1)));
    }
    for (const auto& r : metrics::react_series(acc, 0.1)) {
      props = props && r.steps == 1 && !r.capped;
    }
    // positive integers on arbitrary series
    std::vector<double> noisy;
    for (int i = 0; i < 12; ++i) noisy.push_back(rng.uniform(0.1, 1.0));
    for (const auto& r : metrics::react_series(noisy, 0.1)) {
      props = props && r.steps >= 1;
    }
  }
  const double base = desk_median(cells, "HE7", "nsga2", true);
  const double treated = desk_median(cells, "HE7", "tr-nsga2", true);
  const bool he7_ok =
      std::abs(base - 1.0) <= 1e-12 && std::abs(treated - 1.0) <= 1e-12;
  return {props && he7_ok,
          std::string("react properties ") + (props ? "ok" : "violated") +
              "; HE7 median MReact base " + fmt("%.4f", base) + " tr " +
              fmt("%.4f", treated) + " (required exactly 1.0)"};
}

Outcome criterion8_determinism() {
  bool ok = true;
  std::string failing;
  for (const auto& algo : moea::algorithm_ids()) {
    harness::RunConfig cfg;
    cfg.problem = "DMOP2";
    cfg.algorithm = algo;
    cfg.config_id = "C1";
    cfg.population = 16;
    cfg.generations = 2;
    cfg.changes = 3;
    cfg.tca_dim = 5;
    cfg.source_samples = 12;
    cfg.target_samples = 12;
    cfg.inner_budget = 10;
    const auto a = harness::run_single(cfg, 7);
    const auto b = harness::run_single(cfg, 7);
    if (a.canonical_json().dump() != b.canonical_json().dump()) {
      ok = false;
      failing += algo + " ";
    }
  }
  return {ok, ok ? "byte-identical canonical records for all 6 algorithm ids"
                 : "non-deterministic: " + failing};
}

Outcome criterion9_budget() {
  harness::RunConfig cfg;
  cfg.problem = "FDA4";
  cfg.algorithm = "tr-nsga2";
  cfg.config_id = "C1";  // full schedule: 20 changes
  cfg.population = 50;
  cfg.generations = 5;
  cfg.source_samples = 50;
  cfg.target_samples = 50;
  cfg.tca_dim = 10;
  cfg.inner_budget = 50;
  const auto record = harness::run_single(cfg, 13);
  bool ok = record.changes.size() == 20;
  long long worst_margin = 0;
  for (std::size_t k = 0; k < record.changes.size(); ++k) {
    const long long moa_budget =
        static_cast<long long>(cfg.population) * (cfg.generations + 1);
    long long bound = moa_budget;
    if (k > 0) {
      const long long pof =
          static_cast<long long>(record.changes[k - 1].archive.size());
      bound += cfg.target_samples +
               std::min<long long>(pof, cfg.max_transfer) * cfg.inner_budget;
    }
    const long long margin = bound - record.changes[k].evals;
    if (k == 0 || margin < worst_margin) worst_margin = margin;
    ok = ok && record.changes[k].evals <= bound &&
         record.changes[k].transfer_source_evals <= cfg.source_samples;
  }
  return {ok, "20 changes, tightest margin " + std::to_string(worst_margin) +
                  " evaluations under the bound"};
}

}  // namespace

int main() {
  // touch lazily initialized registries before spawning worker threads
  bench::problem_names();
  kernels::ops();

  std::vector<std::pair<std::string, Outcome>> results;
  results.emplace_back("kernel/TCA correctness", criterion1_kernel_tca());
  results.emplace_back("metric oracles", criterion2_metric_oracles());
  results.emplace_back("dominance sorting vs brute force",
                       criterion3_sorting());
  results.emplace_back("time model end-to-end", criterion4_time_model());

  const auto desk = run_desk_matrix();
  results.emplace_back("desk-scale directional reproduction",
                       criterion5_directional(desk));
  results.emplace_back("desk-scale non-degradation sanity",
                       criterion6_non_degradation(desk));
  results.emplace_back("react properties", criterion7_react(desk));
  results.emplace_back("determinism", criterion8_determinism());
  results.emplace_back("budget accounting", criterion9_budget());

  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [title, outcome] = results[i];
    if (!outcome.passed) ++failures;
    std::printf("[%s] criterion %zu: %s — %s\n",
                outcome.passed ? "PASS" : "FAIL", i + 1, title.c_str(),
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
