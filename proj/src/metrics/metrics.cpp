#include "trdmo/metrics/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "trdmo/kernels/kernels.hpp"

namespace trdmo::metrics {

double igd(const std::vector<ObjectiveVector>& reference,
           const std::vector<ObjectiveVector>& obtained) {
  if (reference.empty() || obtained.empty()) {
    throw std::invalid_argument("igd: both sets must be nonempty");
  }
  const std::size_t dim = reference.front().size();
  for (const auto& v : reference) {
    if (v.size() != dim) throw std::invalid_argument("igd: mixed lengths");
  }
  for (const auto& v : obtained) {
    if (v.size() != dim) {
      throw std::invalid_argument("igd: objective counts differ");
    }
  }
  const std::size_t n = obtained.size();
  std::vector<double> cols(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) cols[j * n + i] = obtained[i][j];
  }
  const auto& ops = kernels::ops();
  double total = 0.0;
  for (const auto& v : reference) {
    total += std::sqrt(ops.min_column_sqdist(cols.data(), n, dim, v.data()));
  }
  return total / static_cast<double>(reference.size());
}

double migd(const std::vector<double>& igd_series) {
  if (igd_series.empty()) throw std::invalid_argument("migd: empty series");
  double total = 0.0;
  for (double v : igd_series) total += v;
  return total / static_cast<double>(igd_series.size());
}

namespace {

double mean_over_configs(const std::map<std::string, double>& per_config,
                         const char* what) {
  static const char* kConfigs[] = {"C1", "C2", "C3", "C4",
                                   "C5", "C6", "C7", "C8"};
  double total = 0.0;
  for (const char* id : kConfigs) {
    auto it = per_config.find(id);
    if (it == per_config.end()) {
      throw std::invalid_argument(std::string(what) + ": missing config " + id);
    }
    total += it->second;
  }
  return total / 8.0;
}

// 2-objective hypervolume by plane sweep over f1-sorted points.
double hv2(std::vector<std::array<double, 2>> pts, double r1, double r2) {
  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double best_f2 = r2;
  for (const auto& p : pts) {
    if (p[1] < best_f2) {
      area += (r1 - p[0]) * (best_f2 - p[1]);
      best_f2 = p[1];
    }
  }
  return area;
}

}  // namespace

double dmigd(const std::map<std::string, double>& migd_per_config) {
  return mean_over_configs(migd_per_config, "dmigd");
}

double hypervolume(const std::vector<ObjectiveVector>& points,
                   const ObjectiveVector& ref) {
  const std::size_t m = ref.size();
  if (m != 2 && m != 3) {
    throw std::invalid_argument("hypervolume: supports 2 or 3 objectives");
  }
  std::vector<const ObjectiveVector*> kept;
  for (const auto& p : points) {
    if (p.size() != m) {
      throw std::invalid_argument("hypervolume: objective counts differ");
    }
    bool inside = true;
    for (std::size_t j = 0; j < m; ++j) inside = inside && p[j] <= ref[j];
    if (inside) kept.push_back(&p);
  }
  if (kept.empty()) return 0.0;

  if (m == 2) {
    std::vector<std::array<double, 2>> pts;
    pts.reserve(kept.size());
    for (const auto* p : kept) pts.push_back({(*p)[0], (*p)[1]});
    return hv2(std::move(pts), ref[0], ref[1]);
  }

  // 3 objectives: integrate 2-D slices along sorted f3 levels.
  std::vector<std::size_t> order(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return (*kept[a])[2] < (*kept[b])[2];
  });
  double volume = 0.0;
  std::vector<std::array<double, 2>> active;
  std::size_t i = 0;
  while (i < order.size()) {
    const double z = (*kept[order[i]])[2];
    while (i < order.size() && (*kept[order[i]])[2] == z) {
      active.push_back({(*kept[order[i]])[0], (*kept[order[i]])[1]});
      ++i;
    }
    const double z_next = i < order.size() ? (*kept[order[i]])[2] : ref[2];
    volume += hv2(active, ref[0], ref[1]) * (z_next - z);
  }
  return volume;
}

std::vector<double> accuracy(const std::vector<double>& hv_series) {
  if (hv_series.empty()) throw std::invalid_argument("accuracy: empty series");
  double peak = 0.0;
  for (double v : hv_series) peak = std::max(peak, v);
  if (!(peak > 0.0)) {
    throw std::domain_error("accuracy: all hypervolumes are zero");
  }
  std::vector<double> acc;
  acc.reserve(hv_series.size());
  for (double v : hv_series) acc.push_back(v / peak);
  return acc;
}

ReactValue react(const std::vector<double>& acc, int t, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("react: epsilon must be in (0, 1)");
  }
  const int horizon = static_cast<int>(acc.size());
  if (t < 0 || t >= horizon - 1) {
    throw std::invalid_argument("react: t must have at least one later step");
  }
  for (int next = t + 1; next < horizon; ++next) {
    if (acc[static_cast<std::size_t>(next)] /
            acc[static_cast<std::size_t>(t)] >=
        1.0 - epsilon) {
      return {next - t, false};
    }
  }
  return {horizon - 1 - t, true};
}

std::vector<ReactValue> react_series(const std::vector<double>& acc,
                                     double epsilon) {
  if (acc.size() < 2) {
    throw std::invalid_argument("react_series: need at least two steps");
  }
  std::vector<ReactValue> out;
  out.reserve(acc.size() - 1);
  for (int t = 0; t + 1 < static_cast<int>(acc.size()); ++t) {
    out.push_back(react(acc, t, epsilon));
  }
  return out;
}

double mreact(const std::vector<ReactValue>& reacts) {
  if (reacts.empty()) throw std::invalid_argument("mreact: empty series");
  double total = 0.0;
  for (const auto& r : reacts) total += r.steps;
  return total / static_cast<double>(reacts.size());
}

double dmreact(const std::map<std::string, double>& mreact_per_config) {
  return mean_over_configs(mreact_per_config, "dmreact");
}

double roc(double base, double treated) {
  if (!(base > 0.0)) throw std::invalid_argument("roc: base must be > 0");
  return 100.0 * (base - treated) / base;
}

}  // namespace trdmo::metrics
