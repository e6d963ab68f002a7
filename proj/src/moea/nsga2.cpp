// NSGA-II per Deb et al. 2002, with the canonical bounded SBX and
// polynomial-mutation operators.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "trdmo/moea/algorithms.hpp"
#include "trdmo/moea/dominance.hpp"

namespace trdmo::moea {

namespace {

void annotate(std::vector<Individual>& pop) {
  const auto fronts = fast_nondominated_sort(pop);
  for (const auto& front : fronts) crowding_distance(pop, front);
}

// true if a is the better tournament candidate
bool crowded_less(const Individual& a, const Individual& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.crowding > b.crowding;
}

int tournament(const std::vector<Individual>& pop, util::Rng& rng) {
  const int i = rng.uniform_int(static_cast<int>(pop.size()));
  const int j = rng.uniform_int(static_cast<int>(pop.size()));
  return crowded_less(pop[static_cast<std::size_t>(j)],
                      pop[static_cast<std::size_t>(i)])
             ? j
             : i;
}

// Bounded simulated binary crossover (Deb & Agrawal): the spread factor is
// contracted per child so the offspring distribution respects the box
// instead of being clamped onto it.
void sbx_pair(const bench::Bounds& b, double eta, double pc, util::Rng& rng,
              bench::DecisionVector& c1, bench::DecisionVector& c2) {
  if (rng.uniform() > pc) return;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    if (rng.uniform() > 0.5) continue;
    const double p1 = c1[j], p2 = c2[j];
    if (std::abs(p1 - p2) < 1e-14) continue;
    const double y1 = std::min(p1, p2), y2 = std::max(p1, p2);
    const double u = rng.uniform();
    auto spread = [&](double beta_bound) {
      const double alpha = 2.0 - std::pow(beta_bound, -(eta + 1.0));
      return u <= 1.0 / alpha
                 ? std::pow(u * alpha, 1.0 / (eta + 1.0))
                 : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };
    const double lo = b.lower[j], hi = b.upper[j];
    const double betaq1 = spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1));
    const double betaq2 = spread(1.0 + 2.0 * (hi - y2) / (y2 - y1));
    double v1 = 0.5 * ((y1 + y2) - betaq1 * (y2 - y1));
    double v2 = 0.5 * ((y1 + y2) + betaq2 * (y2 - y1));
    if (rng.uniform() < 0.5) std::swap(v1, v2);
    c1[j] = std::clamp(v1, lo, hi);
    c2[j] = std::clamp(v2, lo, hi);
  }
}

void polynomial_mutation(const bench::Bounds& b, double eta, double pm,
                         util::Rng& rng, bench::DecisionVector& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (rng.uniform() > pm) continue;
    const double lo = b.lower[j], hi = b.upper[j];
    const double range = hi - lo;
    const double u = rng.uniform();
    double delta;
    if (u < 0.5) {
      const double d1 = (x[j] - lo) / range;
      delta = std::pow(2.0 * u + (1.0 - 2.0 * u) *
                                     std::pow(1.0 - d1, eta + 1.0),
                       1.0 / (eta + 1.0)) -
              1.0;
    } else {
      const double d2 = (hi - x[j]) / range;
      delta = 1.0 - std::pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) *
                                                   std::pow(1.0 - d2,
                                                            eta + 1.0),
                             1.0 / (eta + 1.0));
    }
    x[j] = std::clamp(x[j] + delta * range, lo, hi);
  }
}

}  // namespace

std::vector<Individual> nsga2_run(const bench::DynamicProblem& problem,
                                  double t,
                                  std::vector<bench::DecisionVector> init,
                                  int generations, util::Rng& rng,
                                  bench::EvalCounter* counter,
                                  const Nsga2Params& params) {
  if (init.empty()) throw std::invalid_argument("nsga2_run: empty population");
  if (generations < 0) {
    throw std::invalid_argument("nsga2_run: negative generation count");
  }
  const int n = static_cast<int>(init.size());
  const bench::Bounds& bounds = problem.bounds();
  const double pm = params.mutation_prob > 0.0
                        ? params.mutation_prob
                        : 1.0 / problem.decision_dim();

  std::vector<Individual> pop;
  pop.reserve(static_cast<std::size_t>(n));
  for (auto& x : init) {
    Individual ind;
    ind.f = bench::counted_evaluate(problem, x, t, counter);
    ind.x = std::move(x);
    pop.push_back(std::move(ind));
  }
  annotate(pop);

  for (int gen = 0; gen < generations; ++gen) {
    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(n));
    while (static_cast<int>(offspring.size()) < n) {
      const int a = tournament(pop, rng);
      const int b = tournament(pop, rng);
      bench::DecisionVector c1 = pop[static_cast<std::size_t>(a)].x;
      bench::DecisionVector c2 = pop[static_cast<std::size_t>(b)].x;
      sbx_pair(bounds, params.crossover_eta, params.crossover_prob, rng, c1,
               c2);
      for (auto* c : {&c1, &c2}) {
        if (static_cast<int>(offspring.size()) >= n) break;
        polynomial_mutation(bounds, params.mutation_eta, pm, rng, *c);
        Individual ind;
        ind.f = bench::counted_evaluate(problem, *c, t, counter);
        ind.x = std::move(*c);
        offspring.push_back(std::move(ind));
      }
    }

    std::vector<Individual> merged = std::move(pop);
    merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                  std::make_move_iterator(offspring.end()));
    const auto fronts = fast_nondominated_sort(merged);

    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(n));
    for (const auto& front : fronts) {
      crowding_distance(merged, front);
      if (static_cast<int>(next.size() + front.size()) <= n) {
        for (int idx : front) {
          next.push_back(std::move(merged[static_cast<std::size_t>(idx)]));
        }
      } else {
        std::vector<int> by_crowding = front;
        std::stable_sort(by_crowding.begin(), by_crowding.end(),
                         [&](int a, int b) {
                           return merged[static_cast<std::size_t>(a)].crowding >
                                  merged[static_cast<std::size_t>(b)].crowding;
                         });
        for (int idx : by_crowding) {
          if (static_cast<int>(next.size()) >= n) break;
          next.push_back(std::move(merged[static_cast<std::size_t>(idx)]));
        }
        break;
      }
      if (static_cast<int>(next.size()) >= n) break;
    }
    pop = std::move(next);
    annotate(pop);
  }

  std::vector<Individual> archive;
  for (const auto& ind : pop) {
    if (ind.rank == 0) archive.push_back(ind);
  }
  return archive;
}

}  // namespace trdmo::moea
