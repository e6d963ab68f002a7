#ifndef TRDMO_HARNESS_RECORD_HPP
#define TRDMO_HARNESS_RECORD_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "trdmo/harness/config.hpp"

namespace trdmo::harness {

struct ChangeRecord {
  int index = 0;
  double t = 0.0;
  double igd = 0.0;
  double hv = 0.0;
  long long evals = 0;
  long long transfer_source_evals = 0;
  std::vector<std::vector<double>> archive;  // objective vectors
  double seconds = 0.0;                      // timing; not canonical
};

/// The persistence unit: everything needed to re-score a run without
/// re-running it. Timing and the write timestamp live in a separate JSON
/// subobject so the canonical payload is bit-stable across repeats.
struct RunRecord {
  std::string version;
  RunConfig config;
  std::uint64_t seed = 0;
  std::vector<double> hv_ref;
  std::vector<ChangeRecord> changes;
  double migd = 0.0;
  std::vector<double> acc;         // empty when hypervolume degenerated
  std::vector<int> react_steps;    // one per non-final change
  bool react_capped = false;       // any react hit the horizon
  std::optional<double> mreact;
  double total_seconds = 0.0;
  std::string written_at;

  nlohmann::json to_json() const;
  /// to_json() without the "timing" subobject.
  nlohmann::json canonical_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

std::string record_filename(const RunConfig& cfg, std::uint64_t seed);

/// Atomic write (temp file + rename) of record.to_json() under dir.
void write_record(const RunRecord& record, const std::string& dir);

RunRecord read_record(const std::string& path);

/// All records under a directory (files named *.json, manifest excluded).
std::vector<RunRecord> load_records(const std::string& dir);

}  // namespace trdmo::harness

#endif
