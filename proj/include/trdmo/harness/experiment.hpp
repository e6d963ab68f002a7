#ifndef TRDMO_HARNESS_EXPERIMENT_HPP
#define TRDMO_HARNESS_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "trdmo/harness/record.hpp"

namespace trdmo::harness {

/// One seeded run of the configured cell, fully scored. No file I/O.
RunRecord run_single(const RunConfig& cfg, std::uint64_t seed);

/// One record per configured seed, each written atomically to cfg.out_dir.
std::vector<RunRecord> run_experiment(const RunConfig& cfg);

struct BatchOptions {
  std::vector<std::string> problems;    // empty: all twelve
  std::vector<std::string> algorithms;  // empty: every registered id
  std::vector<std::string> configs;     // empty: C1..C8
  bool force = false;                   // rerun cells with existing records
  int workers = 0;                      // 0: TRDMO_WORKERS env var, else 1
};

struct BatchSummary {
  int completed = 0;
  int skipped = 0;
  int failed = 0;
  std::vector<std::string> failures;  // "cell: reason"
};

/// Runs the requested (problem x algorithm x config) matrix under the base
/// parameters, skipping cells whose record files already exist unless
/// forced. Writes a manifest of completed cells next to the records.
BatchSummary run_batch(const RunConfig& base, const BatchOptions& options);

}  // namespace trdmo::harness

#endif
