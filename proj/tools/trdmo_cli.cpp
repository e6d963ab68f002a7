// Command-line front end: single runs, batch matrices, report generation,
// POF exports, and introspection helpers.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/harness/experiment.hpp"
#include "trdmo/harness/report.hpp"
#include "trdmo/kernels/kernels.hpp"
#include "trdmo/moea/trdmoea.hpp"
#include "trdmo/transfer/ipg.hpp"

namespace {

using trdmo::harness::RunConfig;

// "1..5" or "3,7,11"
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, range_pos));
    const std::uint64_t hi = std::stoull(text.substr(range_pos + 2));
    if (hi < lo) throw CLI::ValidationError("seeds", "range is reversed");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!tok.empty()) seeds.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (seeds.empty()) throw CLI::ValidationError("seeds", "no seeds given");
  return seeds;
}

struct CommonFlags {
  std::string config_file;
  std::string problem, algo, config, seeds, out;
  int pop = -1, gens = -1, changes = -1;
  double timeout = -1.0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool require_cell) {
  cmd->add_option("--config-file", flags.config_file,
                  "JSON config file; flags override its values");
  auto* problem = cmd->add_option("--problem", flags.problem, "problem name");
  auto* algo = cmd->add_option("--algo", flags.algo, "algorithm id");
  auto* config = cmd->add_option("--config", flags.config, "environment C1..C8");
  cmd->add_option("--seeds", flags.seeds, "seed list: 1..5 or 1,2,3");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--pop", flags.pop, "population size");
  cmd->add_option("--gens", flags.gens, "generations per change");
  cmd->add_option("--changes", flags.changes, "number of changes (prefix of the schedule)");
  cmd->add_option("--timeout-sec", flags.timeout, "per-run wall clock guard");
  if (require_cell) {
    problem->required(false);  // may come from the config file; checked later
    algo->required(false);
    config->required(false);
  }
}

RunConfig build_config(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config_file.empty()) {
    cfg = trdmo::harness::load_config(flags.config_file);
  }
  if (!flags.problem.empty()) cfg.problem = flags.problem;
  if (!flags.algo.empty()) cfg.algorithm = flags.algo;
  if (!flags.config.empty()) cfg.config_id = flags.config;
  if (!flags.seeds.empty()) cfg.seeds = parse_seeds(flags.seeds);
  if (!flags.out.empty()) cfg.out_dir = flags.out;
  if (flags.pop > 0) cfg.population = flags.pop;
  if (flags.gens >= 0) cfg.generations = flags.gens;
  if (flags.changes > 0) cfg.changes = flags.changes;
  if (flags.timeout >= 0.0) cfg.timeout_seconds = flags.timeout;
  return cfg;
}

int cmd_run(const CommonFlags& flags) {
  RunConfig cfg = build_config(flags);
  cfg.validate();
  const auto records = trdmo::harness::run_experiment(cfg);
  for (const auto& r : records) {
    std::string mreact;
    if (r.mreact) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " mreact=%.4f", *r.mreact);
      mreact = buf;
    }
    const std::string path =
        cfg.out_dir + "/" + trdmo::harness::record_filename(cfg, r.seed);
    std::printf("%s seed=%llu migd=%.4f%s -> %s\n", cfg.algorithm.c_str(),
                static_cast<unsigned long long>(r.seed), r.migd,
                mreact.c_str(), path.c_str());
  }
  return 0;
}

int cmd_batch(const CommonFlags& flags,
              const trdmo::harness::BatchOptions& options) {
  RunConfig base = build_config(flags);
  const auto summary = trdmo::harness::run_batch(base, options);
  std::printf("batch: %d complete, %d skipped, %d failed\n", summary.completed,
              summary.skipped, summary.failed);
  for (const auto& f : summary.failures) {
    std::fprintf(stderr, "  %s\n", f.c_str());
  }
  return summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transfer-seeded dynamic multiobjective optimization harness"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "run one experiment cell");
  add_common(run_cmd, run_flags, true);

  CommonFlags batch_flags;
  trdmo::harness::BatchOptions batch_options;
  std::string matrix = "full";
  auto* batch_cmd = app.add_subcommand("batch", "run a cell matrix");
  add_common(batch_cmd, batch_flags, false);
  batch_cmd->add_option("--matrix", matrix, "full (all problems x configs)");
  batch_cmd->add_option("--problems", batch_options.problems, "restrict problems")
      ->delimiter(',');
  batch_cmd->add_option("--algos", batch_options.algorithms, "restrict algorithm ids")
      ->delimiter(',');
  batch_cmd->add_option("--configs", batch_options.configs, "restrict configs")
      ->delimiter(',');
  batch_cmd->add_flag("--force", batch_options.force, "rerun completed cells");
  batch_cmd->add_option("--workers", batch_options.workers,
                        "parallel cells (default: TRDMO_WORKERS or 1)");

  std::string report_in, report_out, report_format = "csv";
  auto* report_cmd = app.add_subcommand("report", "tables from stored records");
  report_cmd->add_option("--in", report_in, "record directory")->required();
  report_cmd->add_option("--out", report_out, "report directory (default: <in>/report)");
  report_cmd->add_option("--format", report_format, "csv or json");

  std::string snap_run, snap_out;
  auto* snap_cmd = app.add_subcommand("snapshots", "per-change front snapshots");
  snap_cmd->add_option("--run", snap_run, "record file")->required();
  snap_cmd->add_option("--out", snap_out, "output directory")->required();

  std::string pof_problem, pof_out;
  double pof_t = 0.0;
  int pof_k = 500;
  auto* pof_cmd = app.add_subcommand("pof", "export a true POF sample as CSV");
  pof_cmd->add_option("--problem", pof_problem, "problem name")->required();
  pof_cmd->add_option("--t", pof_t, "environment time");
  pof_cmd->add_option("--k", pof_k, "sample count");
  pof_cmd->add_option("--out", pof_out, "output CSV path")->required();

  std::string ipg_problem, ipg_config = "C1", ipg_out;
  int ipg_change = 1, ipg_pof_k = 100;
  std::uint64_t ipg_seed = 1;
  auto* ipg_cmd = app.add_subcommand(
      "ipg", "run the transfer generator once and dump its debug payload");
  ipg_cmd->add_option("--problem", ipg_problem)->required();
  ipg_cmd->add_option("--config", ipg_config);
  ipg_cmd->add_option("--change", ipg_change, "target change index (>= 1)");
  ipg_cmd->add_option("--pof-k", ipg_pof_k, "true-POF sample used as POF_t");
  ipg_cmd->add_option("--seed", ipg_seed);
  ipg_cmd->add_option("--out", ipg_out, "debug JSON path")->required();

  auto* kernels_cmd = app.add_subcommand("kernels", "show SIMD dispatch state");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(run_flags);
    if (batch_cmd->parsed()) {
      if (matrix != "full") {
        throw std::invalid_argument("batch: unknown matrix \"" + matrix + "\"");
      }
      return cmd_batch(batch_flags, batch_options);
    }
    if (report_cmd->parsed()) {
      if (report_out.empty()) report_out = report_in + "/report";
      const auto records = trdmo::harness::load_records(report_in);
      trdmo::harness::emit_report(records, report_out, report_format);
      std::printf("report: %zu records -> %s\n", records.size(),
                  report_out.c_str());
      return 0;
    }
    if (snap_cmd->parsed()) {
      const auto record = trdmo::harness::read_record(snap_run);
      trdmo::harness::emit_pof_snapshots(record, snap_out);
      std::printf("snapshots: %zu changes -> %s\n", record.changes.size(),
                  snap_out.c_str());
      return 0;
    }
    if (pof_cmd->parsed()) {
      const auto& problem = trdmo::bench::problem_by_name(pof_problem);
      trdmo::bench::write_pof_csv(problem.true_pof(pof_t, pof_k), pof_out);
      std::printf("pof: %s t=%g k=%d -> %s\n", pof_problem.c_str(), pof_t,
                  pof_k, pof_out.c_str());
      return 0;
    }
    if (ipg_cmd->parsed()) {
      const auto& problem = trdmo::bench::problem_by_name(ipg_problem);
      const auto& env = trdmo::bench::environment_config(ipg_config);
      if (ipg_change < 1 || ipg_change >= env.time_model.change_count()) {
        throw std::invalid_argument("ipg: change index out of schedule");
      }
      const double t_prev =
          trdmo::bench::time_of_change(ipg_change - 1, env.time_model);
      const double t_next =
          trdmo::bench::time_of_change(ipg_change, env.time_model);
      const auto pof_prev = problem.true_pof(t_prev, ipg_pof_k);
      trdmo::ipg::IpgConfig cfg;
      cfg.target_pop_size = ipg_pof_k;
      trdmo::ipg::IpgDebug debug;
      trdmo::ipg::tr_ipg(problem, t_prev, t_next, pof_prev, cfg, ipg_seed,
                         nullptr, &debug);
      nlohmann::json j;
      j["problem"] = ipg_problem;
      j["t_prev"] = t_prev;
      j["t_next"] = t_next;
      auto dump_bank = [](const auto& bank) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : bank) arr.push_back(v.values);
        return arr;
      };
      j["source_bank"] = dump_bank(debug.source_bank);
      j["target_bank"] = dump_bank(debug.target_bank);
      j["model"] = trdmo::tca::tca_model_to_json(debug.model);
      j["latent_targets"] = debug.targets.targets;
      j["final_g"] = debug.final_g;
      std::ofstream out(ipg_out);
      if (!out) throw std::runtime_error("cannot open: " + ipg_out);
      out << j.dump(1) << "\n";
      std::printf("ipg: %zu targets -> %s\n", debug.final_g.size(),
                  ipg_out.c_str());
      return 0;
    }
    if (kernels_cmd->parsed()) {
      using trdmo::kernels::Isa;
      for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
        std::printf("%-6s %s%s\n", trdmo::kernels::isa_name(isa),
                    trdmo::kernels::isa_available(isa) ? "available"
                                                       : "unavailable",
                    isa == trdmo::kernels::active_isa() ? " (active)" : "");
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
