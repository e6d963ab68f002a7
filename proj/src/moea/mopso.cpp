// Multiobjective PSO with an external archive and adaptive-grid density
// bookkeeping, after Coello Coello & Lechuga's design.

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "trdmo/moea/algorithms.hpp"
#include "trdmo/moea/dominance.hpp"

namespace trdmo::moea {

namespace {

// Objective-space hypergrid over the archive's bounding box.
class AdaptiveGrid {
 public:
  AdaptiveGrid(const std::vector<Individual>& archive, int divisions)
      : divisions_(divisions) {
    const std::size_t m = archive.front().f.size();
    lo_.assign(m, 0.0);
    hi_.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      double lo = archive.front().f[j], hi = lo;
      for (const auto& ind : archive) {
        lo = std::min(lo, ind.f[j]);
        hi = std::max(hi, ind.f[j]);
      }
      lo_[j] = lo;
      hi_[j] = hi;
    }
    for (std::size_t i = 0; i < archive.size(); ++i) {
      cells_[cell_of(archive[i].f)].push_back(static_cast<int>(i));
    }
  }

  std::uint64_t cell_of(const bench::ObjectiveVector& f) const {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double span = hi_[j] - lo_[j];
      int c = span > 0.0 ? static_cast<int>((f[j] - lo_[j]) / span * divisions_)
                         : 0;
      c = std::clamp(c, 0, divisions_ - 1);
      key = key * static_cast<std::uint64_t>(divisions_ + 1) +
            static_cast<std::uint64_t>(c);
    }
    return key;
  }

  // Leader cell by roulette with weights inversely proportional to density.
  const std::vector<int>& roulette_sparse(util::Rng& rng) const {
    double total = 0.0;
    for (const auto& [key, members] : cells_) {
      total += 1.0 / static_cast<double>(members.size());
    }
    double pick = rng.uniform() * total;
    for (const auto& [key, members] : cells_) {
      pick -= 1.0 / static_cast<double>(members.size());
      if (pick <= 0.0) return members;
    }
    return cells_.rbegin()->second;
  }

  // densest cell, ties broken randomly (a positional tie-break would keep
  // evicting the same end of the front)
  const std::vector<int>& densest(util::Rng& rng) const {
    std::size_t peak = 0;
    for (const auto& [key, members] : cells_) {
      peak = std::max(peak, members.size());
    }
    std::vector<const std::vector<int>*> candidates;
    for (const auto& [key, members] : cells_) {
      if (members.size() == peak) candidates.push_back(&members);
    }
    return *candidates[static_cast<std::size_t>(
        rng.uniform_int(static_cast<int>(candidates.size())))];
  }

 private:
  int divisions_;
  std::vector<double> lo_, hi_;
  std::map<std::uint64_t, std::vector<int>> cells_;
};

// Insert a candidate, keeping the archive mutually nondominated and capped.
void archive_insert(std::vector<Individual>& archive, Individual candidate,
                    int capacity, int divisions, util::Rng& rng) {
  for (const auto& member : archive) {
    if (dominates(member, candidate) || member.f == candidate.f) return;
  }
  std::erase_if(archive,
                [&](const Individual& m) { return dominates(candidate, m); });
  archive.push_back(std::move(candidate));
  if (static_cast<int>(archive.size()) > capacity) {
    const AdaptiveGrid grid(archive, divisions);
    const auto& crowded = grid.densest(rng);
    const int victim = crowded[static_cast<std::size_t>(
        rng.uniform_int(static_cast<int>(crowded.size())))];
    archive.erase(archive.begin() + victim);
  }
}

const Individual& select_leader(const std::vector<Individual>& archive,
                                int divisions, util::Rng& rng) {
  const AdaptiveGrid grid(archive, divisions);
  const auto& cell = grid.roulette_sparse(rng);
  return archive[static_cast<std::size_t>(
      cell[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(cell.size())))])];
}

}  // namespace

std::vector<Individual> mopso_run(const bench::DynamicProblem& problem,
                                  double t,
                                  std::vector<bench::DecisionVector> init,
                                  int generations, util::Rng& rng,
                                  bench::EvalCounter* counter,
                                  const MopsoParams& params) {
  if (init.empty()) throw std::invalid_argument("mopso_run: empty population");
  if (generations < 0) {
    throw std::invalid_argument("mopso_run: negative generation count");
  }
  const int n = static_cast<int>(init.size());
  const int dim = problem.decision_dim();
  const bench::Bounds& bounds = problem.bounds();

  std::vector<Individual> swarm;
  swarm.reserve(static_cast<std::size_t>(n));
  for (auto& x : init) {
    Individual ind;
    ind.f = bench::counted_evaluate(problem, x, t, counter);
    ind.x = std::move(x);
    swarm.push_back(std::move(ind));
  }
  std::vector<Individual> pbest = swarm;
  std::vector<std::vector<double>> velocity(
      static_cast<std::size_t>(n), std::vector<double>(dim, 0.0));

  std::vector<Individual> archive;
  for (const auto& ind : swarm) {
    archive_insert(archive, ind, n, params.grid_divisions, rng);
  }

  for (int gen = 0; gen < generations; ++gen) {
    const double progress =
        generations > 0 ? static_cast<double>(gen) / generations : 0.0;
    for (int i = 0; i < n; ++i) {
      auto& particle = swarm[static_cast<std::size_t>(i)];
      const Individual& leader =
          select_leader(archive, params.grid_divisions, rng);
      auto& v = velocity[static_cast<std::size_t>(i)];
      for (int j = 0; j < dim; ++j) {
        const std::size_t js = static_cast<std::size_t>(j);
        v[js] = params.inertia * v[js] +
                params.cognitive * rng.uniform() *
                    (pbest[static_cast<std::size_t>(i)].x[js] -
                     particle.x[js]) +
                params.social * rng.uniform() * (leader.x[js] - particle.x[js]);
        particle.x[js] += v[js];
        if (particle.x[js] < bounds.lower[js]) {
          particle.x[js] = bounds.lower[js];
          v[js] = -v[js];
        } else if (particle.x[js] > bounds.upper[js]) {
          particle.x[js] = bounds.upper[js];
          v[js] = -v[js];
        }
      }
      // nonuniform mutation: full-range reinitialization early, localizing
      // as the run progresses
      const double decay = std::pow(1.0 - progress, 1.5);
      if (params.mutation_rate > 0.0 &&
          rng.uniform() < params.mutation_rate * decay) {
        const int j = rng.uniform_int(dim);
        const std::size_t js = static_cast<std::size_t>(j);
        const double radius = (bounds.upper[js] - bounds.lower[js]) * decay;
        const double lo = std::max(bounds.lower[js], particle.x[js] - radius);
        const double hi = std::min(bounds.upper[js], particle.x[js] + radius);
        particle.x[js] = rng.uniform(lo, hi);
      }
      particle.f = bench::counted_evaluate(problem, particle.x, t, counter);

      auto& best = pbest[static_cast<std::size_t>(i)];
      if (dominates(particle, best)) {
        best = particle;
      } else if (!dominates(best, particle) && rng.uniform() < 0.5) {
        best = particle;
      }
      archive_insert(archive, particle, n, params.grid_divisions, rng);
    }
  }
  return archive;
}

}  // namespace trdmo::moea
