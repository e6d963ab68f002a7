#ifndef TRDMO_METRICS_METRICS_HPP
#define TRDMO_METRICS_METRICS_HPP

#include <map>
#include <string>
#include <vector>

#include "trdmo/bench/types.hpp"

namespace trdmo::metrics {

using bench::ObjectiveVector;

/// Inverted generational distance: mean over the reference front of the
/// Euclidean distance to the nearest obtained point.
double igd(const std::vector<ObjectiveVector>& reference,
           const std::vector<ObjectiveVector>& obtained);

/// Mean of a per-change IGD series.
double migd(const std::vector<double>& igd_series);

/// Mean MIGD over the eight environment configurations; all of C1..C8 must
/// be present.
double dmigd(const std::map<std::string, double>& migd_per_config);

/// Exact hypervolume for 2 or 3 objectives (minimization, boxes spanned
/// toward `ref`). Points not componentwise <= ref are ignored.
double hypervolume(const std::vector<ObjectiveVector>& points,
                   const ObjectiveVector& ref);

/// acc(t) = hv[t] / max(hv); requires max(hv) > 0.
std::vector<double> accuracy(const std::vector<double>& hv_series);

struct ReactValue {
  int steps = 0;
  bool capped = false;  // no recovery inside the horizon; steps = remainder
};

/// Steps until accuracy recovers to >= (1 - epsilon) of acc[t], scanning
/// strictly after t. t must not be the last index.
ReactValue react(const std::vector<double>& acc, int t, double epsilon);

/// React at every valid step (0 .. |acc|-2).
std::vector<ReactValue> react_series(const std::vector<double>& acc,
                                     double epsilon);

/// Mean of the react step counts.
double mreact(const std::vector<ReactValue>& reacts);

/// Mean MReact over the eight configurations (same contract as dmigd).
double dmreact(const std::map<std::string, double>& mreact_per_config);

/// Percent improvement of `treated` over `base`: 100 (base - treated)/base.
double roc(double base, double treated);

}  // namespace trdmo::metrics

#endif
