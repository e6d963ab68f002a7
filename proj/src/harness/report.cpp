#include "trdmo/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <stdexcept>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/time_model.hpp"
#include "trdmo/metrics/metrics.hpp"
#include "trdmo/moea/trdmoea.hpp"

namespace trdmo::harness {

namespace {

struct CellKey {
  std::string problem, algorithm, config;
  auto operator<=>(const CellKey&) const = default;
};

struct CellStats {
  std::vector<double> migds;
  std::vector<std::optional<double>> mreacts;  // aligned with seeds
  std::vector<std::uint64_t> seeds;
  std::vector<double> hv_ref;
  double epsilon = 0.0;

  double migd_mean() const {
    double s = 0.0;
    for (double v : migds) s += v;
    return s / static_cast<double>(migds.size());
  }
  double migd_var() const {
    if (migds.size() < 2) return 0.0;
    const double mean = migd_mean();
    double s = 0.0;
    for (double v : migds) s += (v - mean) * (v - mean);
    return s / static_cast<double>(migds.size() - 1);
  }
  double mreact_mean() const {
    double s = 0.0;
    int n = 0;
    for (const auto& v : mreacts) {
      if (v) {
        s += *v;
        ++n;
      }
    }
    return n > 0 ? s / n : std::nan("");
  }
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string join_ref(const std::vector<double>& ref) {
  std::string out;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (i) out += ";";
    out += fmt("%.6g", ref[i]);
  }
  return out;
}

// fixed report orders: problems in table order, configs C1..C8, algorithm
// ids in registry order
std::vector<std::string> ordered(const std::set<std::string>& seen,
                                 const std::vector<std::string>& canon) {
  std::vector<std::string> out;
  for (const auto& c : canon) {
    if (seen.count(c)) out.push_back(c);
  }
  for (const auto& s : seen) {
    if (std::find(canon.begin(), canon.end(), s) == canon.end()) {
      out.push_back(s);
    }
  }
  return out;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open for writing: " + p.string());
  return out;
}

}  // namespace

void emit_report(const std::vector<RunRecord>& records,
                 const std::string& out_dir, const std::string& format) {
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("emit_report: format must be csv or json");
  }
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::map<CellKey, CellStats> cells;
  std::set<std::string> problems_seen, algos_seen, configs_seen;
  for (const auto& r : records) {
    const CellKey key{r.config.problem, r.config.algorithm, r.config.config_id};
    auto& cell = cells[key];
    cell.migds.push_back(r.migd);
    cell.mreacts.push_back(r.mreact);
    cell.seeds.push_back(r.seed);
    cell.hv_ref = r.hv_ref;
    cell.epsilon = r.config.react_epsilon;
    problems_seen.insert(key.problem);
    algos_seen.insert(key.algorithm);
    configs_seen.insert(key.config);
  }
  const auto problems = ordered(problems_seen, bench::problem_names());
  const auto algos = ordered(algos_seen, moea::algorithm_ids());
  std::vector<std::string> all_configs;
  for (const auto& c : bench::environment_configs()) all_configs.push_back(c.id);
  const auto configs = ordered(configs_seen, all_configs);

  nlohmann::json jreport;

  // per-seed metric rows
  {
    auto out = open_out(fs::path(out_dir) / "metric_rows.csv");
    out << "problem,algorithm,config,seed,MIGD,MIGD_variance,MReact,HV_ref,"
           "epsilon\n";
    auto& jrows = jreport["metric_rows"] = nlohmann::json::array();
    for (const auto& p : problems) {
      for (const auto& a : algos) {
        for (const auto& c : configs) {
          const auto it = cells.find(CellKey{p, a, c});
          if (it == cells.end()) continue;
          const auto& cell = it->second;
          for (std::size_t s = 0; s < cell.seeds.size(); ++s) {
            const auto& mreact_s = cell.mreacts[s];
            out << p << "," << a << "," << c << "," << cell.seeds[s] << ","
                << fmt("%.4f", cell.migds[s]) << ","
                << fmt("%.4E", cell.migd_var()) << ","
                << (mreact_s ? fmt("%.4f", *mreact_s) : "NA") << ","
                << join_ref(cell.hv_ref) << "," << fmt("%.4f", cell.epsilon)
                << "\n";
            jrows.push_back({{"problem", p},
                             {"algorithm", a},
                             {"config", c},
                             {"seed", cell.seeds[s]},
                             {"migd", cell.migds[s]},
                             {"migd_variance", cell.migd_var()},
                             {"mreact", mreact_s ? nlohmann::json(*mreact_s)
                                                 : nlohmann::json(nullptr)},
                             {"hv_ref", cell.hv_ref},
                             {"epsilon", cell.epsilon}});
          }
        }
      }
    }
  }

  // MIGD mean/variance table
  {
    auto out = open_out(fs::path(out_dir) / "migd_table.csv");
    out << "problem,config,algorithm,seeds,MIGD,VAR\n";
    auto& jmigd = jreport["migd"] = nlohmann::json::array();
    for (const auto& p : problems) {
      for (const auto& c : configs) {
        for (const auto& a : algos) {
          const auto it = cells.find(CellKey{p, a, c});
          if (it == cells.end()) continue;
          out << p << "," << c << "," << a << "," << it->second.seeds.size()
              << "," << fmt("%.4f", it->second.migd_mean()) << ","
              << fmt("%.4E", it->second.migd_var()) << "\n";
          jmigd.push_back({{"problem", p},
                           {"config", c},
                           {"algorithm", a},
                           {"seeds", it->second.seeds.size()},
                           {"migd_mean", it->second.migd_mean()},
                           {"migd_var", it->second.migd_var()}});
        }
      }
    }
  }

  // ROC between each base optimizer and its tr- variant
  std::vector<std::string> gaps;
  {
    auto out = open_out(fs::path(out_dir) / "roc_table.csv");
    out << "problem,config,optimizer,MIGD_base,MIGD_tr,ROC,improved\n";
    auto& jroc = jreport["roc"] = nlohmann::json::array();
    for (const auto& p : problems) {
      for (const auto& c : configs) {
        for (const auto& base_id : moea::moa_ids()) {
          const auto base_it = cells.find(CellKey{p, base_id, c});
          const auto tr_it = cells.find(CellKey{p, "tr-" + base_id, c});
          if (base_it == cells.end() && tr_it == cells.end()) continue;
          if (base_it == cells.end() || tr_it == cells.end()) {
            gaps.push_back("roc:" + p + "|" + base_id + "|" + c +
                           " (missing " +
                           (base_it == cells.end() ? base_id
                                                   : "tr-" + base_id) +
                           ")");
            continue;
          }
          const double base = base_it->second.migd_mean();
          const double treated = tr_it->second.migd_mean();
          const double roc = metrics::roc(base, treated);
          out << p << "," << c << "," << base_id << "," << fmt("%.4f", base)
              << "," << fmt("%.4f", treated) << "," << fmt("%.4f", roc) << ","
              << (roc > 0.0 ? 1 : 0) << "\n";
          jroc.push_back({{"problem", p},
                          {"config", c},
                          {"optimizer", base_id},
                          {"migd_base", base},
                          {"migd_tr", treated},
                          {"roc", roc},
                          {"improved", roc > 0.0}});
        }
      }
    }
  }

  // DMIGD / DMReact over the eight configs
  {
    auto out = open_out(fs::path(out_dir) / "dmigd_table.csv");
    out << "problem,algorithm,DMIGD\n";
    auto react_out = open_out(fs::path(out_dir) / "dmreact_table.csv");
    react_out << "problem,algorithm,DMReact\n";
    auto& jd = jreport["dmigd"] = nlohmann::json::array();
    auto& jr = jreport["dmreact"] = nlohmann::json::array();
    for (const auto& p : problems) {
      for (const auto& a : algos) {
        std::map<std::string, double> migd_by_config, mreact_by_config;
        for (const auto& c : all_configs) {
          const auto it = cells.find(CellKey{p, a, c});
          if (it == cells.end()) continue;
          migd_by_config[c] = it->second.migd_mean();
          const double mr = it->second.mreact_mean();
          if (!std::isnan(mr)) mreact_by_config[c] = mr;
        }
        if (migd_by_config.empty()) continue;
        if (migd_by_config.size() == all_configs.size()) {
          const double v = metrics::dmigd(migd_by_config);
          out << p << "," << a << "," << fmt("%.4f", v) << "\n";
          jd.push_back({{"problem", p}, {"algorithm", a}, {"dmigd", v}});
        } else {
          gaps.push_back("dmigd:" + p + "|" + a + " (" +
                         std::to_string(migd_by_config.size()) +
                         "/8 configs)");
        }
        if (mreact_by_config.size() == all_configs.size()) {
          const double v = metrics::dmreact(mreact_by_config);
          react_out << p << "," << a << "," << fmt("%.4f", v) << "\n";
          jr.push_back({{"problem", p}, {"algorithm", a}, {"dmreact", v}});
        } else {
          gaps.push_back("dmreact:" + p + "|" + a + " (" +
                         std::to_string(mreact_by_config.size()) +
                         "/8 configs)");
        }
      }
    }
  }

  {
    auto out = open_out(fs::path(out_dir) / "gaps.csv");
    out << "gap\n";
    for (const auto& g : gaps) out << g << "\n";
    jreport["gaps"] = gaps;
  }

  if (format == "json") {
    auto out = open_out(fs::path(out_dir) / "report.json");
    out << jreport.dump(1) << "\n";
  }
}

void emit_pof_snapshots(const RunRecord& record, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto& problem = bench::problem_by_name(record.config.problem);
  const int pof_samples = problem.objective_count() == 3
                              ? record.config.pof_samples_3d
                              : record.config.pof_samples_2d;
  const std::string stem = record.config.problem + "_" +
                           record.config.algorithm + "_" +
                           record.config.config_id + "_s" +
                           std::to_string(record.seed);
  for (const auto& change : record.changes) {
    char suffix[32];
    std::snprintf(suffix, sizeof suffix, "_c%02d.csv", change.index);
    auto out = open_out(fs::path(out_dir) / (stem + suffix));
    for (int j = 1; j <= problem.objective_count(); ++j) {
      out << "f" << j << ",";
    }
    out << "source\n";
    char buf[32];
    for (const auto& row : change.archive) {
      for (double v : row) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << ",";
      }
      out << "archive\n";
    }
    for (const auto& v : problem.true_pof(change.t, pof_samples)) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", v[j]);
        out << buf << ",";
      }
      out << "true_pof\n";
    }
  }
}

}  // namespace trdmo::harness
