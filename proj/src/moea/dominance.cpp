#include "trdmo/moea/dominance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace trdmo::moea {

bool dominates(const bench::ObjectiveVector& a,
               const bench::ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: objective counts differ");
  }
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

bool dominates(const Individual& a, const Individual& b) {
  return dominates(a.f, b.f);
}

std::vector<std::vector<int>> fast_nondominated_sort(
    std::vector<Individual>& pop) {
  const int n = static_cast<int>(pop.size());
  std::vector<std::vector<int>> dominated_by(static_cast<std::size_t>(n));
  std::vector<int> domination_count(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> fronts;

  std::vector<int> current;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dominates(pop[i], pop[j])) {
        dominated_by[i].push_back(j);
        ++domination_count[j];
      } else if (dominates(pop[j], pop[i])) {
        dominated_by[j].push_back(i);
        ++domination_count[i];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (domination_count[i] == 0) {
      pop[i].rank = 0;
      current.push_back(i);
    }
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<int> next;
    for (int i : current) {
      for (int j : dominated_by[i]) {
        if (--domination_count[j] == 0) {
          pop[j].rank = static_cast<int>(fronts.size());
          next.push_back(j);
        }
      }
    }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::vector<Individual>& pop,
                                      const std::vector<int>& front) {
  if (front.empty()) {
    throw std::invalid_argument("crowding_distance: empty front");
  }
  const std::size_t sz = front.size();
  const std::size_t m = pop[static_cast<std::size_t>(front[0])].f.size();
  std::vector<double> dist(sz, 0.0);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> order(sz);
  for (std::size_t obj = 0; obj < m; ++obj) {
    for (std::size_t i = 0; i < sz; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return pop[static_cast<std::size_t>(front[a])].f[obj] <
                              pop[static_cast<std::size_t>(front[b])].f[obj];
                     });
    const double lo = pop[static_cast<std::size_t>(front[order.front()])].f[obj];
    const double hi = pop[static_cast<std::size_t>(front[order.back()])].f[obj];
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    if (hi - lo <= 0.0) continue;  // degenerate range: interior gaps stay 0
    for (std::size_t i = 1; i + 1 < sz; ++i) {
      const double gap =
          pop[static_cast<std::size_t>(front[order[i + 1]])].f[obj] -
          pop[static_cast<std::size_t>(front[order[i - 1]])].f[obj];
      dist[order[i]] += gap / (hi - lo);
    }
  }
  for (std::size_t i = 0; i < sz; ++i) {
    pop[static_cast<std::size_t>(front[i])].crowding = dist[i];
  }
  return dist;
}

std::vector<int> nondominated_indices(
    const std::vector<bench::ObjectiveVector>& points) {
  std::vector<int> out;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    bool dominated = false;
    for (int j = 0; j < n && !dominated; ++j) {
      if (j != i && dominates(points[j], points[i])) dominated = true;
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace trdmo::moea
