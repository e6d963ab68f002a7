#ifndef TRDMO_BENCH_TIME_MODEL_HPP
#define TRDMO_BENCH_TIME_MODEL_HPP

#include <string>
#include <vector>

namespace trdmo::bench {

/// Discrete environment schedule: t = floor(tau / frequency) / severity for
/// a running iteration counter tau in [0, horizon]. The horizon is a whole
/// multiple of the frequency, so a full run sees horizon/frequency changes.
struct TimeModel {
  int severity = 10;    // n_t
  int frequency = 5;    // tau_t, iterations per environment
  int horizon = 100;    // tau_T, max iterations

  int change_count() const { return horizon / frequency; }
  void validate() const;  // throws std::invalid_argument on a bad triple
};

/// Environment time at iteration tau. Piecewise constant, steps by
/// 1/severity at each multiple of the frequency.
double time_at(int tau, const TimeModel& tm);

/// The t value in effect during change step k (k = 0 is the initial
/// environment), i.e. time_at(k * frequency).
double time_of_change(int k, const TimeModel& tm);

/// One of the eight benchmark configurations C1..C8.
struct EnvironmentConfig {
  std::string id;
  TimeModel time_model;
};

/// The eight stock configurations, C1..C8 in order.
const std::vector<EnvironmentConfig>& environment_configs();

/// Lookup by id ("C1".."C8"); throws std::invalid_argument for unknown ids.
const EnvironmentConfig& environment_config(const std::string& id);

}  // namespace trdmo::bench

#endif
