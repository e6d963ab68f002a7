#ifndef TRDMO_HARNESS_REPORT_HPP
#define TRDMO_HARNESS_REPORT_HPP

#include <string>
#include <vector>

#include "trdmo/harness/record.hpp"

namespace trdmo::harness {

/// Writes the result tables derived from a record set into out_dir:
/// per-seed metric rows, the MIGD mean/variance table, the ROC table for
/// base/transfer pairs, and the DMIGD / DMReact summaries (which need all
/// eight configs; incomplete combinations are listed in gaps.csv instead).
/// format is "csv" or "json"; ordering and float formatting are fixed so
/// reports are byte-stable.
void emit_report(const std::vector<RunRecord>& records,
                 const std::string& out_dir, const std::string& format = "csv");

/// Per-change CSV snapshots (archive points plus the true front at that t),
/// for external plotting.
void emit_pof_snapshots(const RunRecord& record, const std::string& out_dir);

}  // namespace trdmo::harness

#endif
