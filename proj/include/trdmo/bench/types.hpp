#ifndef TRDMO_BENCH_TYPES_HPP
#define TRDMO_BENCH_TYPES_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace trdmo::bench {

/// Point in the box-constrained decision space of a problem.
struct DecisionVector {
  std::vector<double> values;

  DecisionVector() = default;
  explicit DecisionVector(std::vector<double> v) : values(std::move(v)) {}
  DecisionVector(std::initializer_list<double> v) : values(v) {}
  explicit DecisionVector(std::size_t n, double fill = 0.0)
      : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  double* data() { return values.data(); }
  const double* data() const { return values.data(); }

  friend bool operator==(const DecisionVector&,
                         const DecisionVector&) = default;
};

/// Point in M-dimensional objective space. Kept as a distinct type from
/// DecisionVector so objective-space machinery (kernels, transfer models)
/// cannot be fed decision vectors by accident.
struct ObjectiveVector {
  std::vector<double> values;

  ObjectiveVector() = default;
  explicit ObjectiveVector(std::vector<double> v) : values(std::move(v)) {}
  ObjectiveVector(std::initializer_list<double> v) : values(v) {}
  explicit ObjectiveVector(std::size_t m, double fill = 0.0)
      : values(m, fill) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  double* data() { return values.data(); }
  const double* data() const { return values.data(); }

  friend bool operator==(const ObjectiveVector&,
                         const ObjectiveVector&) = default;
};

/// Per-dimension box bounds, lower[i] < upper[i].
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
};

}  // namespace trdmo::bench

#endif
