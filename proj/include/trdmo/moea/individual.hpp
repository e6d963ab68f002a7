#ifndef TRDMO_MOEA_INDIVIDUAL_HPP
#define TRDMO_MOEA_INDIVIDUAL_HPP

#include <vector>

#include "trdmo/bench/types.hpp"

namespace trdmo::moea {

/// A candidate solution and its objectives at the t it was evaluated under.
/// rank/crowding are the usual nondominated-sorting annotations.
struct Individual {
  bench::DecisionVector x;
  bench::ObjectiveVector f;
  int rank = 0;
  double crowding = 0.0;
};

struct Population {
  std::vector<Individual> members;
  int capacity = 0;
};

}  // namespace trdmo::moea

#endif
