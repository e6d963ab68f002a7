#ifndef TRDMO_BENCH_PROBLEM_HPP
#define TRDMO_BENCH_PROBLEM_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trdmo/bench/types.hpp"
#include "trdmo/util/rng.hpp"

namespace trdmo::bench {

/// How a problem's optima move over time: POS changes only, both POS and
/// POF change, or POF changes only.
enum class DmopType { kTypeI, kTypeII, kTypeIII };

const char* dmop_type_name(DmopType t);

/// A time-dependent multiobjective minimization problem F(x, t) over a box
/// domain, with an analytically known Pareto-optimal front at every t.
/// Implementations are stateless: evaluate and true_pof are pure functions
/// of (x, t) and (t, k), safe to call concurrently.
class DynamicProblem {
 public:
  virtual ~DynamicProblem() = default;

  const std::string& name() const { return name_; }
  int decision_dim() const { return n_; }
  int objective_count() const { return m_; }
  const Bounds& bounds() const { return bounds_; }
  DmopType dmop_type() const { return type_; }

  /// F(x, t). Throws std::domain_error if x violates the bounds and
  /// std::runtime_error if a non-finite objective is produced.
  ObjectiveVector evaluate(const DecisionVector& x, double t) const;

  /// k approximately evenly spread points of the true POF at time t,
  /// sampled on a uniform grid in the front's natural parameterization.
  /// k must be >= 2.
  std::vector<ObjectiveVector> true_pof(double t, int k) const;

 protected:
  DynamicProblem(std::string name, int n, int m, Bounds bounds, DmopType type);

  virtual void eval_impl(const double* x, double t, double* f) const = 0;
  virtual std::vector<ObjectiveVector> pof_impl(double t, int k) const = 0;

 private:
  std::string name_;
  int n_;
  int m_;
  Bounds bounds_;
  DmopType type_;
};

/// Tallies objective evaluations, bucketed by the t they were evaluated at.
struct EvalCounter {
  long long total = 0;
  std::map<double, long long> by_time;

  void add(double t) {
    ++total;
    ++by_time[t];
  }
  long long at(double t) const {
    auto it = by_time.find(t);
    return it == by_time.end() ? 0 : it->second;
  }
};

inline ObjectiveVector counted_evaluate(const DynamicProblem& p,
                                        const DecisionVector& x, double t,
                                        EvalCounter* counter) {
  if (counter) counter->add(t);
  return p.evaluate(x, t);
}

/// Names of the twelve stock problems, in the benchmark's table order.
const std::vector<std::string>& problem_names();

/// Registry lookup; throws std::invalid_argument for unknown names.
const DynamicProblem& problem_by_name(const std::string& name);

/// count i.i.d. uniform samples from the problem's box domain.
std::vector<DecisionVector> sample_decision_space(const DynamicProblem& p,
                                                  int count, util::Rng& rng);

/// Clamp x into the problem's box, in place.
void clamp_to_bounds(const Bounds& b, DecisionVector& x);

/// Write a set of objective vectors as CSV with header f1,...,fM.
void write_pof_csv(const std::vector<ObjectiveVector>& pof,
                   const std::string& path);

}  // namespace trdmo::bench

#endif
