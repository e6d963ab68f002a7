#include "trdmo/bench/time_model.hpp"

#include <stdexcept>

namespace trdmo::bench {

void TimeModel::validate() const {
  if (severity < 1) throw std::invalid_argument("time model: severity must be >= 1");
  if (frequency < 1) throw std::invalid_argument("time model: frequency must be >= 1");
  if (horizon < 1) throw std::invalid_argument("time model: horizon must be >= 1");
  if (horizon % frequency != 0) {
    throw std::invalid_argument(
        "time model: horizon must be a multiple of the frequency");
  }
}

double time_at(int tau, const TimeModel& tm) {
  tm.validate();
  if (tau < 0 || tau > tm.horizon) {
    throw std::invalid_argument("time_at: iteration counter out of range");
  }
  return static_cast<double>(tau / tm.frequency) /
         static_cast<double>(tm.severity);
}

double time_of_change(int k, const TimeModel& tm) {
  tm.validate();
  if (k < 0 || k >= tm.change_count()) {
    throw std::invalid_argument("time_of_change: change index out of range");
  }
  return time_at(k * tm.frequency, tm);
}

const std::vector<EnvironmentConfig>& environment_configs() {
  static const std::vector<EnvironmentConfig> configs = {
      {"C1", {10, 5, 100}},  {"C2", {10, 10, 200}}, {"C3", {10, 25, 500}},
      {"C4", {10, 50, 1000}}, {"C5", {1, 10, 200}},  {"C6", {1, 50, 1000}},
      {"C7", {20, 10, 200}},  {"C8", {20, 50, 1000}},
  };
  return configs;
}

const EnvironmentConfig& environment_config(const std::string& id) {
  for (const auto& c : environment_configs()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("unknown environment config: " + id);
}

}  // namespace trdmo::bench
