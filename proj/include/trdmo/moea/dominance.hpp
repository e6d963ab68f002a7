#ifndef TRDMO_MOEA_DOMINANCE_HPP
#define TRDMO_MOEA_DOMINANCE_HPP

#include <vector>

#include "trdmo/moea/individual.hpp"

namespace trdmo::moea {

/// Pareto domination for minimization: a <= b in every objective and < in at
/// least one. Both vectors must have the same length (they are assumed to be
/// evaluations at the same t).
bool dominates(const bench::ObjectiveVector& a, const bench::ObjectiveVector& b);
bool dominates(const Individual& a, const Individual& b);

/// Deb-style fast nondominated sort; returns fronts as index lists, best
/// front first. Also writes each member's front index into pop[i].rank.
std::vector<std::vector<int>> fast_nondominated_sort(
    std::vector<Individual>& pop);

/// Crowding distances for one front (indices into pop). Boundary members of
/// each objective get +infinity, interior members the sum of normalized
/// neighbor gaps. Also written into pop[i].crowding.
std::vector<double> crowding_distance(std::vector<Individual>& pop,
                                      const std::vector<int>& front);

/// Indices of the nondominated members of a set of objective vectors.
std::vector<int> nondominated_indices(
    const std::vector<bench::ObjectiveVector>& points);

}  // namespace trdmo::moea

#endif
