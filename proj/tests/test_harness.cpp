#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "trdmo/harness/experiment.hpp"
#include "trdmo/harness/report.hpp"
#include "trdmo/moea/trdmoea.hpp"

using namespace trdmo;
using harness::RunConfig;
using harness::RunRecord;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() /
             ("trdmo_test_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RunConfig desk_config() {
  RunConfig cfg;
  cfg.problem = "FDA4";
  cfg.algorithm = "tr-nsga2";
  cfg.config_id = "C1";
  cfg.population = 40;
  cfg.generations = 20;
  cfg.changes = 3;
  cfg.seeds = {1};
  cfg.tca_dim = 6;
  cfg.source_samples = 12;
  cfg.target_samples = 12;
  cfg.inner_budget = 60;
  return cfg;
}

// synthetic record with a prescribed MIGD/MReact, bypassing any run
RunRecord synthetic(const std::string& problem, const std::string& algo,
                    const std::string& config, std::uint64_t seed, double migd,
                    double mreact) {
  RunRecord r;
  r.version = "synthetic";
  r.config = desk_config();
  r.config.problem = problem;
  r.config.algorithm = algo;
  r.config.config_id = config;
  r.seed = seed;
  r.hv_ref = {1.0, 1.0};
  r.migd = migd;
  r.mreact = mreact;
  return r;
}

}  // namespace

TEST_CASE("config defaults and validation") {
  const auto j = nlohmann::json::parse(
      R"({"problem":"FDA4","algorithm":"tr-nsga2","config":"C1"})");
  const RunConfig cfg = RunConfig::from_json(j);
  CHECK(cfg.population == 200);
  CHECK(cfg.generations == 50);
  CHECK(cfg.tca_dim == 20);
  CHECK(cfg.tca_mu == 0.5);
  CHECK(cfg.kernel == "gaussian");
  CHECK(!cfg.kernel_bandwidth);
  CHECK(cfg.react_epsilon == 0.1);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK_NOTHROW(cfg.validate());

  auto bad = cfg;
  bad.config_id = "C9";
  CHECK_THROWS_WITH_AS(bad.validate(), "unknown environment config: C9",
                       std::invalid_argument);
  bad = cfg;
  bad.problem = "NOPE";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.algorithm = "tr-unknown";
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.react_epsilon = 1.5;
  CHECK_THROWS_WITH_AS(bad.validate(),
                       "config.react_epsilon: must be in (0, 1)",
                       std::invalid_argument);

  CHECK_THROWS_WITH_AS(
      RunConfig::from_json(nlohmann::json::parse(R"({"Problem":"FDA4"})")),
      "config: unknown key \"Problem\"", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      RunConfig::from_json(
          nlohmann::json::parse(R"({"population":"two hundred"})")),
      "config.population: wrong type", std::invalid_argument);
}

TEST_CASE("config file round trip with overrides") {
  TempDir dir("config");
  const auto path = dir.path / "cfg.json";
  {
    std::ofstream out(path);
    out << R"({"problem":"HE7","algorithm":"nsga2","config":"C2",
               "population":100,"seeds":[7,8]})";
  }
  const RunConfig cfg = harness::load_config(path.string());
  CHECK(cfg.problem == "HE7");
  CHECK(cfg.population == 100);  // explicit override kept
  CHECK(cfg.generations == 50);  // untouched default
  CHECK(cfg.seeds == std::vector<std::uint64_t>{7, 8});

  // the override survives into the record's config echo
  const auto j = cfg.to_json();
  const RunConfig back = RunConfig::from_json(j);
  CHECK(back.population == 100);
  CHECK(back.seeds == cfg.seeds);
}

TEST_CASE("run_single produces a complete, deterministic record") {
  const RunConfig cfg = desk_config();
  const RunRecord a = harness::run_single(cfg, 1);
  CHECK(a.changes.size() == 3);
  CHECK(a.seed == 1);
  CHECK(a.hv_ref.size() == 3);
  for (const auto& c : a.changes) {
    CHECK(!c.archive.empty());
    CHECK(c.igd >= 0.0);
    CHECK(c.hv >= 0.0);
    CHECK(c.evals > 0);
  }
  CHECK(a.migd > 0.0);
  CHECK(a.acc.size() == 3);
  CHECK(a.react_steps.size() == 2);
  CHECK(a.mreact.has_value());

  const RunRecord b = harness::run_single(cfg, 1);
  CHECK(a.canonical_json().dump() == b.canonical_json().dump());
  const RunRecord c = harness::run_single(cfg, 2);
  CHECK(a.canonical_json().dump() != c.canonical_json().dump());
}

TEST_CASE("record file round trip") {
  TempDir dir("record");
  RunConfig cfg = desk_config();
  cfg.out_dir = dir.path.string();
  const auto records = harness::run_experiment(cfg);
  CHECK(records.size() == 1);
  const auto file = dir.path / harness::record_filename(cfg, 1);
  REQUIRE(fs::exists(file));
  const RunRecord loaded = harness::read_record(file.string());
  CHECK(loaded.canonical_json().dump() == records[0].canonical_json().dump());
  CHECK(loaded.written_at == records[0].written_at);
  CHECK(harness::load_records(dir.path.string()).size() == 1);
}

TEST_CASE("report tables from synthetic records") {
  TempDir dir("report");
  std::vector<RunRecord> records;
  // two problems x all configs x base/tr pairs, two seeds
  const char* configs[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"};
  double base_migd = 0.2, tr_migd = 0.1;
  for (const char* c : configs) {
    for (std::uint64_t seed : {1u, 2u}) {
      records.push_back(synthetic("FDA4", "nsga2", c, seed, base_migd, 1.0));
      records.push_back(synthetic("FDA4", "tr-nsga2", c, seed, tr_migd, 1.0));
    }
  }
  // an incomplete combination: only two configs present
  records.push_back(synthetic("HE7", "nsga2", "C1", 1, 0.05, 1.0));
  records.push_back(synthetic("HE7", "nsga2", "C2", 1, 0.07, 1.0));

  harness::emit_report(records, dir.path.string(), "json");

  // DMIGD equals the hand-computed mean over the eight configs
  std::ifstream in(dir.path / "report.json");
  nlohmann::json report;
  in >> report;
  REQUIRE(report.at("dmigd").size() == 2);
  CHECK(report.at("dmigd")[0].at("problem") == "FDA4");
  CHECK(report.at("dmigd")[0].at("dmigd").get<double>() ==
        doctest::Approx(0.2));
  CHECK(report.at("dmigd")[1].at("dmigd").get<double>() ==
        doctest::Approx(0.1));

  // ROC: positive improvements everywhere on FDA4
  for (const auto& row : report.at("roc")) {
    CHECK(row.at("problem") == "FDA4");
    CHECK(row.at("roc").get<double>() == doctest::Approx(50.0));
    CHECK(row.at("improved") == true);
  }

  // the incomplete HE7 combination lands in the gaps listing
  bool he7_gap = false;
  for (const auto& gap : report.at("gaps")) {
    if (gap.get<std::string>().find("dmigd:HE7|nsga2") != std::string::npos) {
      he7_gap = true;
    }
  }
  CHECK(he7_gap);

  // single-record cells report zero variance
  for (const auto& row : report.at("migd")) {
    if (row.at("problem") == "HE7") {
      CHECK(row.at("migd_var").get<double>() == 0.0);
    }
  }

  CHECK(fs::exists(dir.path / "metric_rows.csv"));
  CHECK(fs::exists(dir.path / "migd_table.csv"));
  CHECK(fs::exists(dir.path / "roc_table.csv"));
  CHECK(fs::exists(dir.path / "dmigd_table.csv"));
  CHECK(fs::exists(dir.path / "dmreact_table.csv"));

  // header contract for the per-seed rows
  std::ifstream rows(dir.path / "metric_rows.csv");
  std::string header;
  std::getline(rows, header);
  CHECK(header ==
        "problem,algorithm,config,seed,MIGD,MIGD_variance,MReact,HV_ref,"
        "epsilon");
}

TEST_CASE("pof snapshots") {
  TempDir dir("snap");
  const RunConfig cfg = desk_config();
  const RunRecord record = harness::run_single(cfg, 3);
  harness::emit_pof_snapshots(record, dir.path.string());

  int files = 0;
  int archive_rows = 0, archive_inside = 0;
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    ++files;
    std::ifstream in(entry.path());
    std::string header;
    std::getline(in, header);
    CHECK(header == "f1,f2,f3,source");
    std::set<std::string> sources;
    std::string line;
    while (std::getline(in, line)) {
      const auto pos = line.rfind(',');
      const std::string tag = line.substr(pos + 1);
      sources.insert(tag);
      double f[3];
      std::sscanf(line.c_str(), "%lf,%lf,%lf", &f[0], &f[1], &f[2]);
      bool in_box = true;
      for (int j = 0; j < 3; ++j) {
        CHECK(f[j] >= 0.0);
        in_box = in_box &&
                 f[j] <= record.hv_ref[static_cast<std::size_t>(j)] + 1e-12;
      }
      if (tag == "true_pof") {
        CHECK(in_box);  // the reference box covers every true front by construction
      } else {
        ++archive_rows;
        if (in_box) ++archive_inside;
      }
    }
    CHECK(sources ==
          std::set<std::string>{"archive", "true_pof"});
  }
  CHECK(files == 3);  // one per change
  // converged archives approximate the front; the bulk must sit inside the
  // reference box (nondominated stragglers may poke out)
  CHECK(archive_inside >= archive_rows * 3 / 5);
}

TEST_CASE("per-run timeout guard aborts instead of blocking") {
  RunConfig cfg = desk_config();
  cfg.timeout_seconds = 1e-9;
  CHECK_THROWS_AS(harness::run_single(cfg, 1), moea::TimeoutError);

  // a batch marks the cell failed and keeps going
  TempDir dir("timeout");
  cfg.out_dir = dir.path.string();
  harness::BatchOptions options;
  options.problems = {"FDA4"};
  options.algorithms = {"nsga2"};
  options.configs = {"C1"};
  const auto summary = harness::run_batch(cfg, options);
  CHECK(summary.failed == 1);
  CHECK(summary.completed == 0);
}

TEST_CASE("batch matrix with manifest and skip logic") {
  TempDir dir("batch");
  RunConfig base = desk_config();
  base.out_dir = dir.path.string();

  harness::BatchOptions options;
  options.problems = {"FDA4"};
  options.algorithms = {"nsga2", "tr-nsga2"};
  options.configs = {"C1"};

  const auto first = harness::run_batch(base, options);
  CHECK(first.completed == 2);
  CHECK(first.skipped == 0);
  CHECK(first.failed == 0);

  REQUIRE(fs::exists(dir.path / "manifest.json"));
  {
    std::ifstream in(dir.path / "manifest.json");
    nlohmann::json manifest;
    in >> manifest;
    CHECK(manifest.at("cells").at("FDA4|nsga2|C1") == "complete");
    CHECK(manifest.at("cells").at("FDA4|tr-nsga2|C1") == "complete");
  }

  // a second pass skips completed cells...
  const auto second = harness::run_batch(base, options);
  CHECK(second.completed == 0);
  CHECK(second.skipped == 2);

  // ...unless forced
  options.force = true;
  const auto third = harness::run_batch(base, options);
  CHECK(third.completed == 2);
  CHECK(third.skipped == 0);
}
