// The twelve dynamic benchmark problems. Bodies follow the CEC 2015 dynamic
// multiobjective suite conventions: FDA4/FDA5 (three-objective spherical
// fronts with a moving tail optimum), the dMOP family (two-objective with a
// time-varying front exponent), DIMP2 (per-variable moving optima), and the
// HE family (static Pareto sets, fronts reshaped by a time exponent). The
// _iso/_dec variants wrap the tail deviation in flat-region / deceptive
// transformations with A = G(t), B = 0.001, C = 0.05.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "trdmo/bench/problem.hpp"
#include "trdmo/bench/transforms.hpp"
#include "trdmo/util/rng.hpp"

namespace trdmo::bench {

double flat_region(double y, double a, double b, double c) {
  if (y < b) return a * y / b;
  if (y <= c) return a;
  return a + (1.0 - a) * (y - c) / (1.0 - c);
}

double deceptive(double y, double a, double b, double c) {
  const double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
  const double t2 = std::floor(a + b - y) *
                    (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
  return 1.0 + (std::abs(y - a) - b) * (t1 + t2 + 1.0 / b);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

double sq(double v) { return v * v; }

// G(t): moving tail optimum, kept inside [0, 1] for every t >= 0.
double moving_optimum(double t) { return std::abs(std::sin(0.5 * kPi * t)); }

// H(t): front shape exponent in [0.5, 2].
double front_exponent(double t) {
  return 0.75 * std::sin(0.5 * kPi * t) + 1.25;
}

// Deceptive-well center must stay strictly inside (B, 1-B).
double deceptive_center(double t) {
  const double a = moving_optimum(t);
  const double lo = 2.0 * kIsoDecParamB;
  return std::min(std::max(a, lo), 1.0 - lo);
}

Bounds unit_box(int n) {
  return {std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
}

Bounds head_unit_tail(int n, double lo, double hi) {
  Bounds b{std::vector<double>(n, lo), std::vector<double>(n, hi)};
  b.lower[0] = 0.0;
  b.upper[0] = 1.0;
  return b;
}

// k near-evenly spread indices over [0, total).
std::vector<std::size_t> spread_indices(std::size_t total, int k) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(
        std::llround(static_cast<double>(i) * static_cast<double>(total - 1) /
                     static_cast<double>(k - 1)));
  }
  return idx;
}

// k points of the positive octant of a sphere of the given radius, from a
// uniform grid in the two angular parameters.
std::vector<ObjectiveVector> sphere_pof(double radius, int k) {
  const int side = static_cast<int>(std::ceil(std::sqrt(double(k))));
  std::vector<ObjectiveVector> grid;
  grid.reserve(static_cast<std::size_t>(side) * side);
  for (int i = 0; i < side; ++i) {
    const double u = 0.5 * kPi * i / (side - 1);
    for (int j = 0; j < side; ++j) {
      const double v = 0.5 * kPi * j / (side - 1);
      grid.push_back(ObjectiveVector{{radius * std::cos(u) * std::cos(v),
                                      radius * std::cos(u) * std::sin(v),
                                      radius * std::sin(u)}});
    }
  }
  std::vector<ObjectiveVector> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::size_t i : spread_indices(grid.size(), k)) out.push_back(grid[i]);
  return out;
}

// k points of a two-objective front given parametrically on s in [0, 1].
// The curve is densely sampled, reduced to its nondominated subset (fronts
// like the HE family's are partly dominated), then thinned to k points.
std::vector<ObjectiveVector> curve_pof(
    const std::function<void(double, double*)>& curve, int k) {
  const int dense = std::max(8 * k, 4096);
  std::vector<std::array<double, 2>> pts(static_cast<std::size_t>(dense));
  for (int i = 0; i < dense; ++i) {
    curve(static_cast<double>(i) / (dense - 1), pts[i].data());
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const auto& a, const auto& b) {
                     return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
                   });
  std::vector<std::array<double, 2>> front;
  front.reserve(pts.size());
  double best_f2 = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    if (p[1] < best_f2) {
      front.push_back(p);
      best_f2 = p[1];
    }
  }
  std::vector<ObjectiveVector> out;
  out.reserve(static_cast<std::size_t>(k));
  if (static_cast<int>(front.size()) <= k) {
    for (const auto& p : front) out.push_back(ObjectiveVector{{p[0], p[1]}});
    return out;
  }
  for (std::size_t i : spread_indices(front.size(), k)) {
    out.push_back(ObjectiveVector{{front[i][0], front[i][1]}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// FDA family (three objectives, n = 12, spherical fronts)

class Fda4 final : public DynamicProblem {
 public:
  Fda4() : DynamicProblem("FDA4", 12, 3, unit_box(12), DmopType::kTypeI) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const double g_opt = moving_optimum(t);
    double g = 0.0;
    for (int i = 2; i < 12; ++i) g += sq(x[i] - g_opt);
    const double s = 1.0 + g;
    f[0] = s * std::cos(0.5 * kPi * x[0]) * std::cos(0.5 * kPi * x[1]);
    f[1] = s * std::cos(0.5 * kPi * x[0]) * std::sin(0.5 * kPi * x[1]);
    f[2] = s * std::sin(0.5 * kPi * x[0]);
  }

  std::vector<ObjectiveVector> pof_impl(double, int k) const override {
    return sphere_pof(1.0, k);
  }
};

// FDA5 tail deviation styles shared with the _iso/_dec variants.
enum class TailStyle { kPlain, kIso, kDec };

double tail_deviation(TailStyle style, double xi, double t) {
  const double g_opt = moving_optimum(t);
  switch (style) {
    case TailStyle::kPlain:
      return sq(xi - g_opt);
    case TailStyle::kIso:
      return sq(flat_region(xi, g_opt, kIsoDecParamB, kIsoDecParamC) - g_opt);
    case TailStyle::kDec:
      return sq(deceptive(xi, deceptive_center(t), kIsoDecParamB,
                          kIsoDecParamC));
  }
  return 0.0;
}

class Fda5 final : public DynamicProblem {
 public:
  Fda5(std::string name, TailStyle style)
      : DynamicProblem(std::move(name), 12, 3, unit_box(12),
                       DmopType::kTypeII),
        style_(style) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const double g_opt = moving_optimum(t);
    double g = g_opt;
    for (int i = 2; i < 12; ++i) g += tail_deviation(style_, x[i], t);
    const double expo = 1.0 + 100.0 * sq(sq(std::sin(0.5 * kPi * t)));
    const double y0 = std::pow(x[0], expo);
    const double y1 = std::pow(x[1], expo);
    const double s = 1.0 + g;
    f[0] = s * std::cos(0.5 * kPi * y0) * std::cos(0.5 * kPi * y1);
    f[1] = s * std::cos(0.5 * kPi * y0) * std::sin(0.5 * kPi * y1);
    f[2] = s * std::sin(0.5 * kPi * y0);
  }

  std::vector<ObjectiveVector> pof_impl(double t, int k) const override {
    return sphere_pof(1.0 + moving_optimum(t), k);
  }

 private:
  TailStyle style_;
};

// ---------------------------------------------------------------------------
// DIMP2: every tail variable tracks its own moving optimum.

class Dimp2 final : public DynamicProblem {
 public:
  Dimp2()
      : DynamicProblem("DIMP2", 10, 2, head_unit_tail(10, -2.0, 2.0),
                       DmopType::kTypeI) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const int n = decision_dim();
    double g = 1.0 + 2.0 * (n - 1);
    for (int i = 1; i < n; ++i) {
      const double gi =
          sq(std::sin(0.5 * kPi * t + 2.0 * kPi * (i + 1) / (n + 1)));
      const double d = x[i] - gi;
      g += sq(d) - 2.0 * std::cos(3.0 * kPi * d);
    }
    f[0] = x[0];
    f[1] = g * (1.0 - std::sqrt(x[0] / g));
  }

  std::vector<ObjectiveVector> pof_impl(double, int k) const override {
    return curve_pof(
        [](double s, double* p) {
          p[0] = s;
          p[1] = 1.0 - std::sqrt(s);
        },
        k);
  }
};

// ---------------------------------------------------------------------------
// dMOP family (two objectives, moving tail optimum and front exponent)

class Dmop2 final : public DynamicProblem {
 public:
  Dmop2(std::string name, TailStyle style)
      : DynamicProblem(std::move(name), 10, 2, unit_box(10),
                       DmopType::kTypeII),
        style_(style) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    double g = 0.0;
    for (int i = 1; i < 10; ++i) g += tail_deviation(style_, x[i], t);
    g = 1.0 + 9.0 * g;
    const double h = front_exponent(t);
    f[0] = x[0];
    f[1] = g * (1.0 - std::pow(x[0] / g, h));
  }

  std::vector<ObjectiveVector> pof_impl(double t, int k) const override {
    const double h = front_exponent(t);
    return curve_pof(
        [h](double s, double* p) {
          p[0] = s;
          p[1] = 1.0 - std::pow(s, h);
        },
        k);
  }

 private:
  TailStyle style_;
};

// dMOP3: the variable carrying the first objective is re-drawn whenever t
// changes; the front itself is static.
class Dmop3 final : public DynamicProblem {
 public:
  Dmop3() : DynamicProblem("DMOP3", 10, 2, unit_box(10), DmopType::kTypeI) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const int r = head_variable(t);
    const double g_opt = moving_optimum(t);
    double g = 0.0;
    for (int i = 0; i < 10; ++i) {
      if (i != r) g += sq(x[i] - g_opt);
    }
    g = 1.0 + 9.0 * g;
    f[0] = x[r];
    f[1] = g * (1.0 - std::sqrt(x[r] / g));
  }

  std::vector<ObjectiveVector> pof_impl(double, int k) const override {
    return curve_pof(
        [](double s, double* p) {
          p[0] = s;
          p[1] = 1.0 - std::sqrt(s);
        },
        k);
  }

 private:
  // Deterministic pseudo-random pick keyed on the bits of t.
  int head_variable(double t) const {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &t, sizeof bits);
    return static_cast<int>(util::mix64(bits, 0x6d6f7033ULL) % 10);
  }
};

// ---------------------------------------------------------------------------
// HE family (static Pareto sets; the front exponent H(t) reshapes the POF)

class He2 final : public DynamicProblem {
 public:
  He2() : DynamicProblem("HE2", 30, 2, unit_box(30), DmopType::kTypeIII) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const int n = decision_dim();
    double g = 0.0;
    for (int i = 1; i < n; ++i) g += x[i];
    g = 1.0 + 9.0 * g / (n - 1);
    const double h = front_exponent(t);
    const double ratio = x[0] / g;
    f[0] = x[0];
    f[1] = g * (1.0 - std::pow(std::sqrt(ratio), h) -
                std::pow(ratio, h) * std::sin(10.0 * kPi * x[0]));
  }

  std::vector<ObjectiveVector> pof_impl(double t, int k) const override {
    const double h = front_exponent(t);
    return curve_pof(
        [h](double s, double* p) {
          p[0] = s;
          p[1] = 1.0 - std::pow(std::sqrt(s), h) -
                 std::pow(s, h) * std::sin(10.0 * kPi * s);
        },
        k);
  }
};

// HE7/HE9 share the paired-variable deviation layout: odd-indexed tail
// variables load the first objective, even-indexed ones load g.
class He7 final : public DynamicProblem {
 public:
  He7() : DynamicProblem("HE7", 10, 2, unit_box(10), DmopType::kTypeIII) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const int n = decision_dim();
    double sum_odd = 0.0, sum_even = 0.0;
    int n_odd = 0, n_even = 0;
    for (int j = 2; j <= n; ++j) {  // 1-based variable index
      const double y =
          x[j - 1] -
          std::pow(x[0], 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)));
      const double term = 4.0 * sq(y) - std::cos(8.0 * kPi * y) + 1.0;
      if (j % 2 == 1) {
        sum_odd += term;
        ++n_odd;
      } else {
        sum_even += term;
        ++n_even;
      }
    }
    const double f1 = x[0] + 2.0 * sum_odd / n_odd;
    const double g = 2.0 - std::sqrt(x[0]) + 2.0 * sum_even / n_even;
    f[0] = f1;
    f[1] = g * (1.0 - std::pow(f1 / g, front_exponent(t)));
  }

  std::vector<ObjectiveVector> pof_impl(double t, int k) const override {
    const double h = front_exponent(t);
    return curve_pof(
        [h](double s, double* p) {
          const double g = 2.0 - std::sqrt(s);
          p[0] = s;
          p[1] = g * (1.0 - std::pow(s / g, h));
        },
        k);
  }
};

class He9 final : public DynamicProblem {
 public:
  He9()
      : DynamicProblem("HE9", 10, 2, head_unit_tail(10, -1.0, 1.0),
                       DmopType::kTypeIII) {}

 protected:
  void eval_impl(const double* x, double t, double* f) const override {
    const int n = decision_dim();
    double sum_odd = 0.0, sum_even = 0.0;
    int n_odd = 0, n_even = 0;
    for (int j = 2; j <= n; ++j) {
      const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
      if (j % 2 == 1) {
        sum_odd += sq(y);
        ++n_odd;
      } else {
        sum_even += sq(y);
        ++n_even;
      }
    }
    const double f1 = x[0] + 2.0 * sum_odd / n_odd;
    const double g = 2.0 - sq(x[0]) + 2.0 * sum_even / n_even;
    f[0] = f1;
    f[1] = g * (1.0 - std::pow(f1 / g, front_exponent(t)));
  }

  std::vector<ObjectiveVector> pof_impl(double t, int k) const override {
    const double h = front_exponent(t);
    return curve_pof(
        [h](double s, double* p) {
          const double g = 2.0 - sq(s);
          p[0] = s;
          p[1] = g * (1.0 - std::pow(s / g, h));
        },
        k);
  }
};

std::vector<std::unique_ptr<DynamicProblem>> make_all() {
  std::vector<std::unique_ptr<DynamicProblem>> v;
  v.push_back(std::make_unique<Fda4>());
  v.push_back(std::make_unique<Fda5>("FDA5", TailStyle::kPlain));
  v.push_back(std::make_unique<Fda5>("FDA5_iso", TailStyle::kIso));
  v.push_back(std::make_unique<Fda5>("FDA5_dec", TailStyle::kDec));
  v.push_back(std::make_unique<Dimp2>());
  v.push_back(std::make_unique<Dmop2>("DMOP2", TailStyle::kPlain));
  v.push_back(std::make_unique<Dmop2>("DMOP2_iso", TailStyle::kIso));
  v.push_back(std::make_unique<Dmop2>("DMOP2_dec", TailStyle::kDec));
  v.push_back(std::make_unique<Dmop3>());
  v.push_back(std::make_unique<He2>());
  v.push_back(std::make_unique<He7>());
  v.push_back(std::make_unique<He9>());
  return v;
}

const std::vector<std::unique_ptr<DynamicProblem>>& registry() {
  static const auto all = make_all();
  return all;
}

}  // namespace

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : registry()) v.push_back(p->name());
    return v;
  }();
  return names;
}

const DynamicProblem& problem_by_name(const std::string& name) {
  for (const auto& p : registry()) {
    if (p->name() == name) return *p;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace trdmo::bench
