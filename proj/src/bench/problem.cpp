#include "trdmo/bench/problem.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace trdmo::bench {

const char* dmop_type_name(DmopType t) {
  switch (t) {
    case DmopType::kTypeI: return "TypeI";
    case DmopType::kTypeII: return "TypeII";
    case DmopType::kTypeIII: return "TypeIII";
  }
  return "unknown";
}

DynamicProblem::DynamicProblem(std::string name, int n, int m, Bounds bounds,
                               DmopType type)
    : name_(std::move(name)), n_(n), m_(m), bounds_(std::move(bounds)),
      type_(type) {}

ObjectiveVector DynamicProblem::evaluate(const DecisionVector& x,
                                         double t) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument(name_ + ": decision vector has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(n_));
  }
  if (t < 0.0) throw std::invalid_argument(name_ + ": t must be >= 0");
  for (int i = 0; i < n_; ++i) {
    if (x[i] < bounds_.lower[i] || x[i] > bounds_.upper[i]) {
      throw std::domain_error(name_ + ": variable " + std::to_string(i + 1) +
                              " out of bounds");
    }
  }
  ObjectiveVector f(static_cast<std::size_t>(m_));
  eval_impl(x.data(), t, f.data());
  for (int i = 0; i < m_; ++i) {
    if (!std::isfinite(f[i])) {
      throw std::runtime_error(name_ + ": non-finite objective " +
                               std::to_string(i + 1));
    }
  }
  return f;
}

std::vector<ObjectiveVector> DynamicProblem::true_pof(double t, int k) const {
  if (k < 2) throw std::invalid_argument("true_pof: k must be >= 2");
  if (t < 0.0) throw std::invalid_argument("true_pof: t must be >= 0");
  return pof_impl(t, k);
}

std::vector<DecisionVector> sample_decision_space(const DynamicProblem& p,
                                                  int count, util::Rng& rng) {
  if (count < 1) {
    throw std::invalid_argument("sample_decision_space: count must be >= 1");
  }
  const Bounds& b = p.bounds();
  std::vector<DecisionVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    DecisionVector x(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      x[j] = rng.uniform(b.lower[j], b.upper[j]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

void clamp_to_bounds(const Bounds& b, DecisionVector& x) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (x[j] < b.lower[j]) x[j] = b.lower[j];
    if (x[j] > b.upper[j]) x[j] = b.upper[j];
  }
}

void write_pof_csv(const std::vector<ObjectiveVector>& pof,
                   const std::string& path) {
  if (pof.empty()) throw std::invalid_argument("write_pof_csv: empty set");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t j = 0; j < pof[0].size(); ++j) {
    out << (j ? ",f" : "f") << (j + 1);
  }
  out << "\n";
  char buf[32];
  for (const auto& v : pof) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", v[j]);
      out << (j ? "," : "") << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace trdmo::bench
