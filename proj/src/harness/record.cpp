#include "trdmo/harness/record.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace trdmo::harness {

nlohmann::json RunRecord::to_json() const {
  nlohmann::json j = canonical_json();
  j["timing"] = {{"total_seconds", total_seconds},
                 {"per_change_seconds", [&] {
                    std::vector<double> s;
                    s.reserve(changes.size());
                    for (const auto& c : changes) s.push_back(c.seconds);
                    return s;
                  }()},
                 {"written_at", written_at}};
  return j;
}

nlohmann::json RunRecord::canonical_json() const {
  nlohmann::json j;
  j["schema"] = "trdmo.run/1";
  j["version"] = version;
  j["config"] = config.to_json();
  j["seed"] = seed;
  j["hv_ref"] = hv_ref;
  auto& ch = j["changes"] = nlohmann::json::array();
  for (const auto& c : changes) {
    ch.push_back({{"index", c.index},
                  {"t", c.t},
                  {"igd", c.igd},
                  {"hv", c.hv},
                  {"evals", c.evals},
                  {"transfer_source_evals", c.transfer_source_evals},
                  {"archive", c.archive}});
  }
  j["migd"] = migd;
  j["acc"] = acc;
  j["react"] = {{"steps", react_steps}, {"capped", react_capped}};
  if (mreact) {
    j["mreact"] = *mreact;
  } else {
    j["mreact"] = nullptr;
  }
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != "trdmo.run/1") {
    throw std::invalid_argument("record: unsupported schema");
  }
  RunRecord r;
  r.version = j.at("version").get<std::string>();
  r.config = RunConfig::from_json(j.at("config"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.hv_ref = j.at("hv_ref").get<std::vector<double>>();
  for (const auto& c : j.at("changes")) {
    ChangeRecord cr;
    cr.index = c.at("index").get<int>();
    cr.t = c.at("t").get<double>();
    cr.igd = c.at("igd").get<double>();
    cr.hv = c.at("hv").get<double>();
    cr.evals = c.at("evals").get<long long>();
    cr.transfer_source_evals = c.at("transfer_source_evals").get<long long>();
    cr.archive = c.at("archive").get<std::vector<std::vector<double>>>();
    r.changes.push_back(std::move(cr));
  }
  r.migd = j.at("migd").get<double>();
  r.acc = j.at("acc").get<std::vector<double>>();
  r.react_steps = j.at("react").at("steps").get<std::vector<int>>();
  r.react_capped = j.at("react").at("capped").get<bool>();
  if (!j.at("mreact").is_null()) r.mreact = j.at("mreact").get<double>();
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    r.total_seconds = t.at("total_seconds").get<double>();
    const auto per = t.at("per_change_seconds").get<std::vector<double>>();
    for (std::size_t i = 0; i < per.size() && i < r.changes.size(); ++i) {
      r.changes[i].seconds = per[i];
    }
    r.written_at = t.at("written_at").get<std::string>();
  }
  return r;
}

std::string record_filename(const RunConfig& cfg, std::uint64_t seed) {
  return cfg.problem + "_" + cfg.algorithm + "_" + cfg.config_id + "_s" +
         std::to_string(seed) + ".json";
}

void write_record(const RunRecord& record, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path final_path =
      fs::path(dir) / record_filename(record.config, record.seed);
  const fs::path tmp_path = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp_path);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " +
                               tmp_path.string());
    }
    out << record.to_json().dump(1) << "\n";
    if (!out) throw std::runtime_error("write failed: " + tmp_path.string());
  }
  fs::rename(tmp_path, final_path);
}

RunRecord read_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record: " + path);
  nlohmann::json j;
  in >> j;
  return RunRecord::from_json(j);
}

std::vector<RunRecord> load_records(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() == ".json" && p.filename() != "manifest.json") {
      paths.push_back(p);
    }
  }
  std::sort(paths.begin(), paths.end());
  std::vector<RunRecord> records;
  records.reserve(paths.size());
  for (const auto& p : paths) records.push_back(read_record(p.string()));
  return records;
}

}  // namespace trdmo::harness
